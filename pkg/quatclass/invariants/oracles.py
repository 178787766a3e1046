"""
Independent class number oracles
Cross-checks for the form-counting engines: the finite Dirichlet sum for
imaginary fields and the analytic class number formula for real fields
"""

from fractions import Fraction

import mpmath

from quatclass.arith import assert_integral, kronecker, require_prime
from quatclass.errors import ConsistencyError
from quatclass.invariants.fields import field_discriminant
from quatclass.invariants.forms import require_negative_squarefree
from quatclass.invariants.units import fundamental_unit

# Distance to the nearest integer tolerated by the analytic oracle
_ANALYTIC_TOLERANCE = mpmath.mpf(10) ** -20

def h_imag_dirichlet(d: int) -> int:
    """
    h(Q(sqrt d)) for d < 0 from h = -(w / 2|D|) * sum_{0<a<|D|} chi(a) a,
    chi = (D|.), in exact integer arithmetic.
    """
    require_negative_squarefree(d)
    disc = field_discriminant(d)
    roots_of_unity = {-3: 6, -4: 4}.get(disc, 2)
    modulus = -disc
    total = sum(kronecker(disc, a) * a for a in range(1, modulus))
    value = Fraction(-roots_of_unity * total, 2 * modulus)
    return assert_integral(value, f"h_dirichlet({d})")

def h_real_oracle(p: int) -> int:
    """
    h(Q(sqrt p)) from h log(eps) = -1/2 sum_{0<a<D} chi(a) log sin(pi a / D),
    evaluated with 50 significant digits and required to land within 1e-20
    of an integer.
    """
    require_prime(p)
    disc = field_discriminant(p)
    unit = fundamental_unit(p)
    with mpmath.workdps(50):
        numerator = mpmath.mpf(1)
        denominator = mpmath.mpf(1)
        # chi is even, so the half range a < D/2 carries the whole sum
        for a in range(1, (disc + 1) // 2):
            chi = kronecker(disc, a)
            if chi == 1:
                numerator *= mpmath.sinpi(mpmath.mpf(a) / disc)
            elif chi == -1:
                denominator *= mpmath.sinpi(mpmath.mpf(a) / disc)
        eps = (mpmath.mpf(unit.a) + unit.b * mpmath.sqrt(p)) / unit.denominator
        estimate = mpmath.log(denominator / numerator) / mpmath.log(eps)
        nearest = int(mpmath.nint(estimate))
        if nearest < 1 or abs(estimate - nearest) > _ANALYTIC_TOLERANCE:
            raise ConsistencyError(
                f"analytic class number estimate for p={p} is not near a positive integer",
                {"estimate": mpmath.nstr(estimate, 30)},
            )
    return nearest
