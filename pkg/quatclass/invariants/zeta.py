"""
zeta_F(-1) for real quadratic fields by Siegel's divisor-sum formula
"""

from fractions import Fraction
from functools import lru_cache

from quatclass.arith import isqrt, require_prime, sigma1
from quatclass.invariants.fields import FieldInvariants, field_discriminant
from quatclass.invariants.forms import h_real, narrow_class_number

def siegel_sum(disc: int) -> int:
    """Sum of sigma1((D - b^2)/4) over b with b^2 < D and b = D mod 2"""
    total = 0
    b = disc % 2
    limit = isqrt(disc - 1)
    while b <= limit:
        term = sigma1((disc - b * b) // 4)
        total += term if b == 0 else 2 * term
        b += 2
    return total

@lru_cache(maxsize=None)
def zeta_minus_one_real_quadratic(p: int) -> Fraction:
    """
    zeta_F(-1) for F = Q(sqrt p), as the positive rational siegel_sum(D)/60.

    Args:
        p: Prime; D is p when p = 1 mod 4 and 4p otherwise
    """
    require_prime(p)
    return Fraction(siegel_sum(field_discriminant(p)), 60)

def field_invariants_qsqrtp(p: int) -> FieldInvariants:
    """Degree, signed zeta_F(-1), h and h+ of Q(sqrt p)"""
    return FieldInvariants(
        degree=2,
        zeta_minus_one=zeta_minus_one_real_quadratic(p),
        class_number=h_real(p),
        narrow_class_number=narrow_class_number(p),
    )
