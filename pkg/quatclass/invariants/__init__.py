# Quadratic field invariants package
from quatclass.invariants.fields import (
    Signature, QuadField, FieldInvariants, field_discriminant, quad_field,
)
from quatclass.invariants.units import FundamentalUnit, fundamental_unit, is_totally_positive
from quatclass.invariants.forms import (
    h_imag, h_real, narrow_class_number, narrow_form_class_number,
    reduced_definite_forms, reduced_indefinite_forms,
)
from quatclass.invariants.zeta import (
    siegel_sum, zeta_minus_one_real_quadratic, field_invariants_qsqrtp,
)
from quatclass.invariants.oracles import h_imag_dirichlet, h_real_oracle
