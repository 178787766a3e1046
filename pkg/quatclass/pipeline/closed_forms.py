"""
Closed formulas for the Q(sqrt p) family in terms of zeta_F(-1), h(-p),
h(-2p), h(-3p) and (2|p)
"""

from fractions import Fraction

from quatclass.arith import assert_integral, kronecker, require_prime
from quatclass.errors import InvalidInputError
from quatclass.invariants import h_imag, zeta_minus_one_real_quadratic
from quatclass.selectivity.genus import SpinorGenusTag

def _require_p3mod4(p: int) -> int:
    require_prime(p)
    if p % 4 != 3 or p < 7:
        raise InvalidInputError(f"regime mismatch: p = {p} is not a prime = 3 mod 4 with p >= 7")
    return p

def type_number_value(p: int) -> Fraction:
    """|Tp(D)| = zeta/2 + (13 - 5(2|p)) h(-p)/8 + h(-2p)/4 + h(-3p)/6"""
    _require_p3mod4(p)
    sigma = kronecker(2, p)
    return (zeta_minus_one_real_quadratic(p) / 2
            + Fraction((13 - 5 * sigma) * h_imag(-p), 8)
            + Fraction(h_imag(-2 * p), 4)
            + Fraction(h_imag(-3 * p), 6))

def type_number_total(p: int) -> int:
    """
    Number of types of maximal orders in D over Q(sqrt p), p = 3 mod 4, p >= 7.

    Raises:
        InvalidInputError: p outside that regime
        IntegralityError: the value is not a positive integer
    """
    return assert_integral(type_number_value(p), f"|Tp| at p={p}")

def spinor_type_number_value(p: int, genus_tag: SpinorGenusTag) -> Fraction:
    """
    |Tp+| = zeta/4 + (17 - (2|p)) h(-p)/16 + h(-2p)/8 + h(-3p)/12
    |Tp-| = zeta/4 + (9 - 9(2|p)) h(-p)/16 + h(-2p)/8 + h(-3p)/12
    """
    _require_p3mod4(p)
    sigma = kronecker(2, p)
    coefficient = 17 - sigma if SpinorGenusTag(genus_tag).is_principal else 9 - 9 * sigma
    return (zeta_minus_one_real_quadratic(p) / 4
            + Fraction(coefficient * h_imag(-p), 16)
            + Fraction(h_imag(-2 * p), 8)
            + Fraction(h_imag(-3 * p), 12))

def h1_closed_value(p: int, genus_tag: SpinorGenusTag = SpinorGenusTag.PRINCIPAL) -> Fraction:
    """
    h^1 of a maximal order over Q(sqrt p) in closed form:
    zeta/2 + h(-p)/8 + h(-3p)/6 for p = 1 mod 4, p >= 13;
    zeta/2 + (11 - 3(2|p)) h(-p)/8 + h(-3p)/6 (principal) or
    zeta/2 + (3 - 3(2|p)) h(-p)/8 + h(-3p)/6 (nonprincipal) for p = 3 mod 4, p >= 7.
    """
    require_prime(p)
    zeta = zeta_minus_one_real_quadratic(p)
    if p % 4 == 1 and p >= 13:
        return zeta / 2 + Fraction(h_imag(-p), 8) + Fraction(h_imag(-3 * p), 6)
    _require_p3mod4(p)
    sigma = kronecker(2, p)
    coefficient = 11 - 3 * sigma if SpinorGenusTag(genus_tag).is_principal else 3 - 3 * sigma
    return zeta / 2 + Fraction(coefficient * h_imag(-p), 8) + Fraction(h_imag(-3 * p), 6)

def coefficient_identity_holds() -> bool:
    """(17 - s) + (9 - 9s) = 2(13 - 5s) for s = +-1"""
    return all((17 - s) + (9 - 9 * s) == 2 * (13 - 5 * s) for s in (1, -1))
