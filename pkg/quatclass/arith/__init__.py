# Exact arithmetic package
from quatclass.arith.rational import (
    Rational, parse_rational, parse_exact_int, rational_to_json, format_rational,
    assert_integral, RationalField, ExactInt, ExactModel,
)
from quatclass.arith.primes import (
    Factorization, kronecker, factorize, sigma1, is_prime, is_squarefree,
    require_prime, isqrt,
)
