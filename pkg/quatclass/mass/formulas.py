"""
Mass formulas
Mass^1(O), Mass(O) and Mass_sc(O) for an order in a totally definite
quaternion algebra, the spinor class group size, and the Q(sqrt p)
maximal-order profile the automatic pipeline feeds them
"""

from fractions import Fraction

from quatclass.arith import ExactModel, RationalField, require_prime
from quatclass.errors import ConsistencyError, UnsupportedCaseError
from quatclass.invariants import field_invariants_qsqrtp, is_totally_positive
from quatclass.mass.profile import OrderProfile
from quatclass.utils.logger import setup_logger

logger = setup_logger(__name__)

def require_eichler_nonzero(order: OrderProfile) -> OrderProfile:
    """Refuse profiles with e_p = 0 at some prime"""
    zero = [local.prime_id for local in order.locals if local.eichler_invariant == 0]
    if zero:
        raise UnsupportedCaseError(UnsupportedCaseError.POLICY, {"primes": ", ".join(zero)})
    return order

def _common(order: OrderProfile) -> Fraction:
    # |zeta_F(-1)| * Nm(d(O)) * prod of local factors
    return order.field.abs_zeta * order.discriminant_norm() * order.local_product()

def mass1(order: OrderProfile) -> Fraction:
    """Mass^1(O) = |zeta_F(-1)| Nm(d(O)) / (2^n [O_F^ : Nr(O^x)]) * prod local factors"""
    return _common(order) / (2 ** order.field.degree * order.norm_unit_index)

def mass_total(order: OrderProfile) -> Fraction:
    """Mass(O) = h(F) |zeta_F(-1)| Nm(d(O)) / 2^(n-1) * prod local factors"""
    return order.field.class_number * _common(order) / 2 ** (order.field.degree - 1)

def mass_sc(order: OrderProfile) -> Fraction:
    """Mass(O) restricted to one spinor class"""
    denominator = 2 ** (order.field.degree - 1) * order.norm_unit_index * order.u_value
    return _common(order) / denominator

def scl_size(order: OrderProfile) -> int:
    """
    |SCl(O)| = h(F) [O_F^ : Nr(O^x)] u(O).

    Raises:
        ConsistencyError: all e_p are nonzero but the size is not h+(F)
    """
    size = order.field.class_number * order.norm_unit_index * order.u_value
    if order.all_eichler_nonzero() and size != order.field.narrow_class_number:
        raise ConsistencyError(
            f"|SCl(O)| = {size} differs from h+(F) = {order.field.narrow_class_number}",
            {"h": order.field.class_number, "norm_unit_index": order.norm_unit_index,
             "u": order.u_value},
        )
    return size

def u_of_order_qsqrtp(p: int) -> int:
    """u(O) of a maximal order over Q(sqrt p): 2 iff the fundamental unit is totally positive"""
    require_prime(p)
    return 2 if is_totally_positive(p) else 1

def maximal_order_profile_qsqrtp(p: int) -> OrderProfile:
    """Profile of a maximal order in D over Q(sqrt p): d(O) = O_F, so no local data"""
    return OrderProfile(
        field=field_invariants_qsqrtp(p),
        locals=[],
        norm_unit_index=1,
        u_value=u_of_order_qsqrtp(p),
    )

class MassSummary(ExactModel):
    """The three masses and |SCl(O)| of one order"""

    mass1: RationalField
    mass_total: RationalField
    mass_sc: RationalField
    scl_size: int

def mass_summary(order: OrderProfile) -> MassSummary:
    """
    Evaluate all masses and check the identities tying them together.

    Raises:
        UnsupportedCaseError: some local profile has e_p = 0
        ConsistencyError: a mass is not positive, Mass_sc * |SCl| != Mass,
            or Mass / Mass^1 != 2 h(F) [O_F^ : Nr(O^x)]
    """
    require_eichler_nonzero(order)
    summary = MassSummary(
        mass1=mass1(order),
        mass_total=mass_total(order),
        mass_sc=mass_sc(order),
        scl_size=scl_size(order),
    )
    dump = {"mass1": summary.mass1, "mass_total": summary.mass_total,
            "mass_sc": summary.mass_sc, "scl_size": summary.scl_size}
    if min(summary.mass1, summary.mass_total, summary.mass_sc) <= 0:
        raise ConsistencyError("masses must be positive", dump)
    if summary.mass_sc * summary.scl_size != summary.mass_total:
        raise ConsistencyError("Mass_sc * |SCl| != Mass", dump)
    ratio = 2 * order.field.class_number * order.norm_unit_index
    if summary.mass_total != ratio * summary.mass1:
        raise ConsistencyError("Mass / Mass^1 != 2 h(F) [O_F^ : Nr(O^x)]", dump)
    logger.debug(f"masses: {dump}")
    return summary
