# Q(sqrt p) pipeline package
from quatclass.pipeline.closed_forms import (
    type_number_total, type_number_value, spinor_type_number_value, h1_closed_value,
    coefficient_identity_holds,
)
from quatclass.pipeline.identities import (
    CheckCategory, CheckSelection, IdentityResult, run_report_identities, first_failure,
)
from quatclass.pipeline.report import (
    GenusResult, ClassNumberReport, auxiliary_class_numbers, resolve_table,
    formula_input_qsqrtp, report,
)
from quatclass.pipeline.batch import BatchRow, BatchSummary, primes_in_range, batch_row, batch
