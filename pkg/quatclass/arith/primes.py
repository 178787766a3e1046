"""
Elementary number-theoretic kernels
Kronecker symbol, divisor sums, trial-division factorization and a
deterministic primality test, on top of gmpy2's integer primitives
"""

from dataclasses import dataclass
from typing import Iterator, Tuple

import gmpy2

from quatclass.errors import InvalidInputError

# 2-3-5 wheel: gaps between successive integers coprime to 30, starting at 7
_WHEEL_GAPS = (4, 2, 4, 2, 4, 6, 2, 6)

# Strong-probable-prime bases that are deterministic below 3.3 * 10^24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

@dataclass(frozen=True)
class Factorization:
    """Prime factorization as strictly increasing (prime, exponent) pairs"""

    factors: Tuple[Tuple[int, int], ...]

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def primes(self) -> Tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def value(self) -> int:
        """Reconstruct the factored integer"""
        result = 1
        for q, e in self.factors:
            result *= q ** e
        return result

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

def kronecker(a: int, n: int) -> int:
    """
    Kronecker symbol (a|n) with the standard extension to every integer n:
    (a|2) = 0 for even a and +-1 by a mod 8 otherwise, (a|-1) = sign of a,
    (a|0) = 1 iff a = +-1.
    """
    return int(gmpy2.kronecker(a, n))

def _wheel_divisors() -> Iterator[int]:
    yield 2
    yield 3
    yield 5
    candidate = 7
    while True:
        for gap in _WHEEL_GAPS:
            yield candidate
            candidate += gap

def factorize(n: int) -> Factorization:
    """
    Factor n by trial division up to sqrt(n) with a 2-3-5 wheel.

    Args:
        n: Positive integer (intended scale below 10^12)

    Returns:
        Factorization with increasing primes

    Raises:
        InvalidInputError: n < 1
    """
    if n < 1:
        raise InvalidInputError(f"cannot factor {n}: positive integer required")
    factors = []
    remaining = n
    for d in _wheel_divisors():
        if d * d > remaining:
            break
        if remaining % d == 0:
            exponent = 0
            while remaining % d == 0:
                remaining //= d
                exponent += 1
            factors.append((d, exponent))
    if remaining > 1:
        factors.append((remaining, 1))
    return Factorization(tuple(factors))

def sigma1(n: int) -> int:
    """
    Sum of the positive divisors of n.

    Raises:
        InvalidInputError: n < 1
    """
    if n < 1:
        raise InvalidInputError(f"sigma1 is defined for n >= 1, got {n}")
    total = 1
    for q, e in factorize(n):
        total *= (q ** (e + 1) - 1) // (q - 1)
    return total

def is_prime(n: int) -> bool:
    """Deterministic primality test (exact for every n below 3.3 * 10^24)"""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n < 41 * 41:
        return True
    # n is coprime to every base here, as is_strong_prp requires
    return all(gmpy2.is_strong_prp(n, a) for a in _MR_BASES)

def is_squarefree(n: int) -> bool:
    """Whether |n| has no repeated prime factor (0 is not squarefree)"""
    if n == 0:
        return False
    return factorize(abs(n)).is_squarefree()

def require_prime(p: int, what: str = "p") -> int:
    """Validate a prime argument, raising the input error the CLI maps to exit 2"""
    if isinstance(p, bool) or not isinstance(p, int):
        raise InvalidInputError(f"{what} must be an integer, got {p!r}")
    if not is_prime(p):
        raise InvalidInputError(f"{what} = {p} is not prime")
    return p

def isqrt(n: int) -> int:
    """Integer square root"""
    return int(gmpy2.isqrt(n))
