#!/usr/bin/env python3
"""
quatclass Exact Arithmetic Testing Suite
Tests rational parsing, integrality checks and the number-theoretic kernels
"""

import unittest
import sys
import os
from fractions import Fraction
from math import gcd

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '.')))

from quatclass.arith import (
    assert_integral, factorize, format_rational, is_prime, is_squarefree, isqrt,
    kronecker, parse_exact_int, parse_rational, rational_to_json, require_prime, sigma1,
)
from quatclass.errors import IntegralityError, InvalidInputError

class RationalTests(unittest.TestCase):
    """Exact rational input and output"""

    def test_parse_rational_forms(self):
        """Integers, 'a/b' strings and num/den mappings parse to the same Fraction"""
        self.assertEqual(parse_rational(3), Fraction(3))
        self.assertEqual(parse_rational("2/4"), Fraction(1, 2))
        self.assertEqual(parse_rational(" -7 "), Fraction(-7))
        self.assertEqual(parse_rational({"num": "1", "den": "12"}), Fraction(1, 12))

    def test_parse_rational_rejects_floats(self):
        """Floats and bools are never exact input"""
        for bad in (0.5, True, "1.5", "1/0", {"num": "1"}):
            with self.assertRaises(ValueError):
                parse_rational(bad)

    def test_parse_exact_int(self):
        self.assertEqual(parse_exact_int("+42"), 42)
        self.assertEqual(parse_exact_int(-5), -5)
        with self.assertRaises(ValueError):
            parse_exact_int("4e2")

    def test_json_form(self):
        """Rationals serialize as digit strings"""
        self.assertEqual(rational_to_json(Fraction(-3, 4)), {"num": "-3", "den": "4"})
        self.assertEqual(format_rational(Fraction(1, 12)), "1/12")
        self.assertEqual(format_rational(Fraction(6, 3)), "2")

    def test_assert_integral(self):
        """Integral values pass through; fractions raise with the diagnostics attached"""
        self.assertEqual(assert_integral(Fraction(4, 2), "h1"), 2)
        with self.assertRaises(IntegralityError) as ctx:
            assert_integral(Fraction(5, 3), "h1", {"2*mass1": "1/3"})
        self.assertIn("h1", ctx.exception.diagnostics)
        self.assertEqual(ctx.exception.diagnostics["2*mass1"], "1/3")
        self.assertEqual(ctx.exception.exit_code, 3)

    def test_assert_integral_positive(self):
        with self.assertRaises(IntegralityError):
            assert_integral(0, "h_sc")
        self.assertEqual(assert_integral(0, "difference", positive=False), 0)

class PrimeTests(unittest.TestCase):
    """Kronecker symbol, factorization and primality"""

    def test_kronecker(self):
        self.assertEqual(kronecker(-7, 2), 1)
        self.assertEqual(kronecker(3, 2), -1)
        self.assertEqual(kronecker(4, 2), 0)
        self.assertEqual(kronecker(2, 7), 1)
        self.assertEqual(kronecker(2, 3), -1)
        self.assertEqual(kronecker(-5, -1), -1)

    def test_factorize(self):
        self.assertEqual(factorize(84).factors, ((2, 2), (3, 1), (7, 1)))
        self.assertEqual(factorize(1).factors, ())
        self.assertEqual(factorize(97).factors, ((97, 1),))
        self.assertEqual(factorize(2 ** 10 * 49).value(), 2 ** 10 * 49)
        with self.assertRaises(InvalidInputError):
            factorize(0)

    def test_sigma1(self):
        self.assertEqual(sigma1(1), 1)
        self.assertEqual(sigma1(12), 28)
        self.assertEqual(sigma1(7), 8)

    def test_is_prime(self):
        self.assertTrue(is_prime(2))
        self.assertTrue(is_prime(7919))
        self.assertTrue(is_prime(2 ** 61 - 1))
        self.assertFalse(is_prime(1))
        self.assertFalse(is_prime(561))
        self.assertFalse(is_prime(3215031751))

    def test_is_squarefree(self):
        self.assertTrue(is_squarefree(-39))
        self.assertFalse(is_squarefree(12))
        self.assertFalse(is_squarefree(0))

    def test_require_prime(self):
        self.assertEqual(require_prime(13), 13)
        with self.assertRaises(InvalidInputError) as ctx:
            require_prime(8)
        self.assertIn("not prime", str(ctx.exception))
        self.assertEqual(ctx.exception.exit_code, 2)

    def test_isqrt(self):
        self.assertEqual(isqrt(28), 5)
        self.assertEqual(isqrt(10 ** 20), 10 ** 10)

class ArithmeticLawTests(unittest.TestCase):
    """Algebraic laws checked over small ranges"""

    def test_kronecker_multiplicative_in_numerator(self):
        for n in range(1, 51):
            for a in range(-20, 21):
                for b in range(-20, 21):
                    self.assertEqual(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n), (a, b, n))

    def test_kronecker_multiplicative_in_denominator(self):
        for a in range(-30, 31):
            for m in range(1, 41):
                for n in range(1, 41):
                    self.assertEqual(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n), (a, m, n))

    def test_euler_criterion(self):
        """(a|p) = a^((p-1)/2) mod p for odd primes p"""
        for p in (n for n in range(3, 200) if is_prime(n)):
            for a in range(-50, 51):
                self.assertEqual(kronecker(a, p) % p, pow(a % p, (p - 1) // 2, p), (a, p))

    def test_sigma1_multiplicative_on_coprime(self):
        for m in range(1, 51):
            for n in range(1, 51):
                if gcd(m, n) == 1:
                    self.assertEqual(sigma1(m * n), sigma1(m) * sigma1(n), (m, n))

    def test_rational_sum_round_trip(self):
        """(a/b + c/d) - c/d = a/b on parsed values, and the sum serializes reduced"""
        for a in range(-6, 7):
            for b in range(1, 7):
                for c in range(-6, 7):
                    for d in range(1, 7):
                        x = parse_rational(f"{a}/{b}")
                        y = parse_rational({"num": str(c), "den": str(d)})
                        self.assertEqual((x + y) - y, x)
                        total = parse_rational(rational_to_json(x + y))
                        self.assertEqual(total - y, Fraction(a, b))

if __name__ == "__main__":
    unittest.main()
