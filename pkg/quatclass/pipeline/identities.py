"""
Identity checks attached to every Q(sqrt p) report
Each check compares independently computed quantities (assembled sums against
closed forms, per-genus values against totals, tables against derivations)
"""

from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Callable, Iterable, List, Optional, Tuple

from pydantic import Field

from quatclass.arith import ExactModel, format_rational
from quatclass.cm.tables import (
    B_1_2, B_1_3, O_F_SQRT_MINUS_1, O_K1, O_K2, O_K3, Z_SQRT2_SQRT_MINUS_1, Regime,
)
from quatclass.invariants import h_imag
from quatclass.pipeline.closed_forms import (
    coefficient_identity_holds, h1_closed_value, spinor_type_number_value, type_number_value,
)
from quatclass.selectivity import (
    SpinorGenusTag, delta_from_conductor_k1, k_in_sigma_eichler, qsqrtp_cm_extension, qsqrtp_genus,
)
from quatclass.utils.logger import log_check_result, setup_logger

if TYPE_CHECKING:
    from quatclass.pipeline.report import ClassNumberReport

logger = setup_logger(__name__)

# Values printed for the small primes: zeta_F(-1) and h1 per spinor genus
SMALL_PRIME_VALUES = {
    2: (Fraction(1, 12), {"principal": 1}),
    3: (Fraction(1, 6), {"principal": 1, "nonprincipal": 1}),
    5: (Fraction(1, 30), {"principal": 1}),
}

# CM extension containing each table order
_EXTENSION_OF = {
    O_F_SQRT_MINUS_1: "K1", B_1_2: "K1", B_1_3: "K1", O_K1: "K1", Z_SQRT2_SQRT_MINUS_1: "K1",
    O_K2: "K2", O_K3: "K3",
}

class CheckCategory(str, Enum):
    IDENTITY = "identity"
    INTEGRALITY = "integrality"

class CheckSelection(str, Enum):
    """Which checks a batch run evaluates"""
    ALL = "all"
    IDENTITIES = "identities"
    INTEGRALITY = "integrality"

    def includes(self, category: CheckCategory) -> bool:
        return category in _SELECTED_CATEGORIES[self]

_SELECTED_CATEGORIES = {
    CheckSelection.ALL: {CheckCategory.IDENTITY, CheckCategory.INTEGRALITY},
    CheckSelection.IDENTITIES: {CheckCategory.IDENTITY},
    CheckSelection.INTEGRALITY: {CheckCategory.INTEGRALITY},
}

class IdentityResult(ExactModel):
    """One named check: {name, status, detail}"""

    name: str
    category: CheckCategory = CheckCategory.IDENTITY
    status: str = Field(pattern="^(pass|fail)$")
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

Check = Tuple[str, CheckCategory, Callable[["ClassNumberReport"], Optional[Tuple[bool, str]]]]

def _integrality(report: "ClassNumberReport"):
    values = [report.type_number_total]
    for genus in report.per_genus.values():
        values += [genus.h1, genus.h_sc, genus.type_count]
    ok = all(isinstance(v, int) and v >= 1 for v in values)
    return ok, f"values {values}"

def _mass_identities(report: "ClassNumberReport"):
    m = report.masses
    ok = (m.mass_sc * m.scl_size == m.mass_total
          and m.mass_total == 2 * report.field.class_number * m.mass1
          and min(m.mass1, m.mass_total, m.mass_sc) > 0)
    return ok, f"mass1={format_rational(m.mass1)} mass={format_rational(m.mass_total)} mass_sc={format_rational(m.mass_sc)}"

def _twice_mass1_leading_term(report: "ClassNumberReport"):
    lhs, rhs = 2 * report.masses.mass1, report.field.zeta_minus_one / 2
    return lhs == rhs, f"2*mass1={format_rational(lhs)} zeta/2={format_rational(rhs)}"

def _spinor_mass(report: "ClassNumberReport"):
    if report.p % 4 != 3:
        return None
    expected = report.field.zeta_minus_one / 4
    return report.masses.mass_sc == expected, f"mass_sc={format_rational(report.masses.mass_sc)} zeta/4={format_rational(expected)}"

def _aggregation(report: "ClassNumberReport"):
    if report.regime != Regime.P3MOD4:
        return None
    split = sum(g.type_count for g in report.per_genus.values())
    total = type_number_value(report.p)
    return split == total, f"|Tp+|+|Tp-|={split} |Tp|={format_rational(total)}"

def _coefficient_identity(report: "ClassNumberReport"):
    if report.regime != Regime.P3MOD4:
        return None
    return coefficient_identity_holds(), "(17-s)+(9-9s) = 2(13-5s)"

def _difference(report: "ClassNumberReport"):
    if report.regime != Regime.P3MOD4:
        return None
    diff = report.per_genus["principal"].h1 - report.per_genus["nonprincipal"].h1
    return diff == h_imag(-report.p), f"h1+ - h1- = {diff}, h(-p) = {h_imag(-report.p)}"

def _sc_equals_h1(report: "ClassNumberReport"):
    if report.p % 4 == 3:
        return None
    genus = report.per_genus["principal"]
    return genus.h1 == genus.h_sc, f"h1={genus.h1} h_sc={genus.h_sc}"

def _h1_dominates(report: "ClassNumberReport"):
    pairs = {tag: (g.h1, g.h_sc) for tag, g in report.per_genus.items()}
    return all(a >= b for a, b in pairs.values()), f"(h1, h_sc) per genus {pairs}"

def _closed_forms(report: "ClassNumberReport"):
    if report.regime == Regime.P1MOD4:
        closed = h1_closed_value(report.p)
        genus = report.per_genus["principal"]
        return genus.h1 == closed, f"h1={genus.h1} closed={format_rational(closed)}"
    if report.regime != Regime.P3MOD4:
        return None
    details, ok = [], True
    for tag in SpinorGenusTag:
        genus = report.per_genus[tag.value]
        h1_closed = h1_closed_value(report.p, tag)
        type_closed = spinor_type_number_value(report.p, tag)
        ok = ok and genus.h1 == h1_closed and genus.h_sc == type_closed
        details.append(f"{tag.value}: h1={genus.h1}/{format_rational(h1_closed)} "
                       f"h_sc={genus.h_sc}/{format_rational(type_closed)}")
    return ok, "; ".join(details)

def _small_prime_values(report: "ClassNumberReport"):
    if report.p not in SMALL_PRIME_VALUES:
        return None
    zeta, h1_values = SMALL_PRIME_VALUES[report.p]
    got = {tag: g.h1 for tag, g in report.per_genus.items()}
    ok = report.field.zeta_minus_one == zeta and got == h1_values
    return ok, f"zeta={format_rational(report.field.zeta_minus_one)} h1={got}"

def _delta_derivation(report: "ClassNumberReport"):
    if report.p % 4 != 3:
        return None
    mismatches = []
    for row in report.b_tables.b1_entries:
        if _EXTENSION_OF.get(row.label) != "K1":
            continue
        for tag in SpinorGenusTag:
            derived = delta_from_conductor_k1(report.p, row.conductor_valuations, tag)
            if derived != row.delta(tag.is_principal):
                mismatches.append(f"{row.label}/{tag.value}")
    return not mismatches, f"mismatches {mismatches}" if mismatches else "K1 deltas derived from O_K1"

def _selectivity_column(report: "ClassNumberReport"):
    genus = qsqrtp_genus(report.p)
    rows = report.b_tables.b_entries or report.b_tables.b1_entries
    mismatches = []
    for row in rows:
        name = _EXTENSION_OF.get(row.label)
        if name is None:
            continue
        selected = k_in_sigma_eichler(genus, qsqrtp_cm_extension(report.p, name))
        if selected != row.in_spinor_genus_field:
            mismatches.append(row.label)
    return not mismatches, f"mismatches {mismatches}" if mismatches else "s column matches K in Sigma"

def _noncyclic_split(report: "ClassNumberReport"):
    if report.noncyclic_types is None:
        return None
    counts = {tag.value: 0 for tag in SpinorGenusTag}
    for tag in report.noncyclic_types.values():
        counts[SpinorGenusTag(tag).value] += 1
    ok = all(counts[tag] <= g.type_count for tag, g in report.per_genus.items())
    if report.p == 3:
        ok = ok and counts == {"principal": 1, "nonprincipal": 1}
    return ok, f"non-cyclic types per genus {counts}"

REPORT_CHECKS: List[Check] = [
    ("integrality", CheckCategory.INTEGRALITY, _integrality),
    ("mass_identities", CheckCategory.IDENTITY, _mass_identities),
    ("twice_mass1_leading_term", CheckCategory.IDENTITY, _twice_mass1_leading_term),
    ("spinor_mass", CheckCategory.IDENTITY, _spinor_mass),
    ("type_number_aggregation", CheckCategory.IDENTITY, _aggregation),
    ("coefficient_identity", CheckCategory.IDENTITY, _coefficient_identity),
    ("h1_difference", CheckCategory.IDENTITY, _difference),
    ("h_sc_equals_h1", CheckCategory.IDENTITY, _sc_equals_h1),
    ("h1_dominates_h_sc", CheckCategory.IDENTITY, _h1_dominates),
    ("closed_forms", CheckCategory.IDENTITY, _closed_forms),
    ("small_prime_values", CheckCategory.IDENTITY, _small_prime_values),
    ("delta_derivation", CheckCategory.IDENTITY, _delta_derivation),
    ("selectivity_column", CheckCategory.IDENTITY, _selectivity_column),
    ("noncyclic_split", CheckCategory.IDENTITY, _noncyclic_split),
]

def run_report_identities(report: "ClassNumberReport",
                          selection: CheckSelection = CheckSelection.ALL) -> List[IdentityResult]:
    """Evaluate the applicable checks of the selection, in a fixed order"""
    results = []
    for name, category, check in REPORT_CHECKS:
        if not selection.includes(category):
            continue
        outcome = check(report)
        if outcome is None:
            continue
        passed, detail = outcome
        log_check_result(logger, name, passed, detail)
        results.append(IdentityResult(name=name, category=category,
                                      status="pass" if passed else "fail", detail=detail))
    return results

def first_failure(results: Iterable[IdentityResult]) -> Optional[IdentityResult]:
    return next((r for r in results if not r.passed), None)
