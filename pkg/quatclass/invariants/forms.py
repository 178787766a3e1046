"""
Class numbers of quadratic fields by binary quadratic form reduction
Imaginary fields: count reduced positive definite forms.
Real fields: count cycles of reduced indefinite forms (narrow classes),
then correct by the norm of the fundamental unit.
"""

from functools import lru_cache
from typing import Iterator, Set, Tuple

from quatclass.arith import is_squarefree, isqrt, require_prime
from quatclass.errors import InvalidInputError
from quatclass.invariants.fields import field_discriminant
from quatclass.invariants.units import fundamental_unit
from quatclass.utils.logger import setup_logger

logger = setup_logger(__name__)

Form = Tuple[int, int, int]

def require_negative_squarefree(d: int) -> int:
    """Validate the radicand of an imaginary quadratic field"""
    if isinstance(d, bool) or not isinstance(d, int):
        raise InvalidInputError(f"d must be an integer, got {d!r}")
    if d >= 0 or not is_squarefree(d):
        raise InvalidInputError(f"d = {d} must be a negative squarefree integer")
    return d

def reduced_definite_forms(disc: int) -> Iterator[Form]:
    """
    Reduced primitive forms (a, b, c) of a negative fundamental discriminant:
    |b| <= a <= c, b^2 - 4ac = disc, and b >= 0 when |b| = a or a = c.
    """
    b = disc % 2
    b_max = isqrt(-disc // 3)
    while b <= b_max:
        n = (b * b - disc) // 4
        for a in range(max(b, 1), isqrt(n) + 1):
            if n % a:
                continue
            c = n // a
            yield (a, b, c)
            if 0 < b < a < c:
                yield (a, -b, c)
        b += 2

@lru_cache(maxsize=None)
def h_imag(d: int) -> int:
    """
    Class number of Q(sqrt d), d < 0 squarefree, by counting reduced forms
    of the field discriminant.
    """
    require_negative_squarefree(d)
    return sum(1 for _ in reduced_definite_forms(field_discriminant(d)))

def _is_reduced_indefinite(form: Form, root: int) -> bool:
    # root = floor(sqrt(D)); D is not a square so strict and floor comparisons agree
    a, b, _ = form
    return 0 < b <= root and 2 * abs(a) + b > root and 2 * abs(a) - b <= root

def reduced_indefinite_forms(disc: int) -> Set[Form]:
    """All reduced forms of a positive non-square fundamental discriminant"""
    root = isqrt(disc)
    forms: Set[Form] = set()
    b = 1 if disc % 2 else 2
    while b <= root:
        n = (disc - b * b) // 4
        for a0 in range(1, n + 1):
            if a0 * a0 > n:
                break
            if n % a0:
                continue
            for a in {a0, n // a0}:
                for signed in (a, -a):
                    candidate = (signed, b, -n // signed)
                    if _is_reduced_indefinite(candidate, root):
                        forms.add(candidate)
        b += 2
    return forms

def rho(form: Form, disc: int) -> Form:
    """Reduction operator: (a, b, c) -> (c, b', (b'^2 - D)/4c), b' = -b mod 2|c|"""
    _, b, c = form
    root = isqrt(disc)
    modulus = 2 * abs(c)
    b_next = root - (root + b) % modulus
    return (c, b_next, (b_next * b_next - disc) // (4 * c))

@lru_cache(maxsize=None)
def narrow_form_class_number(disc: int) -> int:
    """Number of rho-cycles of reduced forms, i.e. proper equivalence classes"""
    remaining = reduced_indefinite_forms(disc)
    cycles = 0
    while remaining:
        start = remaining.pop()
        current = rho(start, disc)
        while current != start:
            remaining.discard(current)
            current = rho(current, disc)
        cycles += 1
    return cycles

@lru_cache(maxsize=None)
def h_real(p: int) -> int:
    """
    Class number of Q(sqrt p): narrow form class number, halved when the
    fundamental unit is totally positive.
    """
    require_prime(p)
    narrow = narrow_form_class_number(field_discriminant(p))
    if fundamental_unit(p).norm_sign == 1:
        return narrow // 2
    return narrow

@lru_cache(maxsize=None)
def narrow_class_number(p: int) -> int:
    """h+(Q(sqrt p)) = h * [O_{F,+}^x : O_F^{x2}], the index being 2 iff p = 3 mod 4"""
    require_prime(p)
    index = 2 if fundamental_unit(p).norm_sign == 1 else 1
    result = h_real(p) * index
    logger.debug(f"h+(Q(sqrt {p})) = {result}")
    return result
