#!/usr/bin/env python3
"""
quatclass Quadratic Field Invariants Testing Suite
Tests class numbers, fundamental units and zeta values of quadratic fields
"""

import unittest
import sys
import os
from fractions import Fraction

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '.')))

from pydantic import ValidationError

from quatclass.errors import InvalidInputError
from quatclass.invariants import (
    FieldInvariants, Signature, field_discriminant, field_invariants_qsqrtp, fundamental_unit,
    h_imag, h_imag_dirichlet, h_real, h_real_oracle, is_totally_positive, narrow_class_number,
    quad_field, zeta_minus_one_real_quadratic,
)

class ImaginaryClassNumberTests(unittest.TestCase):
    """Reduced form counts against the Dirichlet sum"""

    def test_known_values(self):
        expected = {-1: 1, -2: 1, -3: 1, -5: 2, -6: 2, -7: 1, -14: 4, -21: 4, -23: 3, -39: 4}
        for d, h in expected.items():
            self.assertEqual(h_imag(d), h, f"h(Q(sqrt {d}))")

    def test_dirichlet_agrees(self):
        for d in (-1, -3, -5, -15, -39, -47, -71, -163, -231):
            self.assertEqual(h_imag(d), h_imag_dirichlet(d), f"d = {d}")

    def test_rejects_bad_radicand(self):
        for d in (-4, -12, 0, 5):
            with self.assertRaises(InvalidInputError):
                h_imag(d)

class RealQuadraticTests(unittest.TestCase):
    """h, h+ and fundamental units of Q(sqrt p)"""

    def test_class_numbers(self):
        for p in (2, 3, 5, 7, 11, 13):
            self.assertEqual(h_real(p), 1)
        self.assertEqual(h_real(79), 3)
        self.assertEqual(h_real(229), 3)
        self.assertEqual(h_real(401), 5)

    def test_analytic_oracle(self):
        self.assertEqual(h_real_oracle(229), 3)
        self.assertEqual(h_real_oracle(401), 5)
        self.assertEqual(h_real_oracle(79), 3)

    def test_narrow_class_number(self):
        """h+ doubles h exactly when p = 3 mod 4"""
        self.assertEqual(narrow_class_number(2), 1)
        self.assertEqual(narrow_class_number(3), 2)
        self.assertEqual(narrow_class_number(5), 1)
        self.assertEqual(narrow_class_number(79), 6)

    def test_fundamental_units(self):
        self.assertEqual(fundamental_unit(3).describe(), "2+1·√3, norm +1")
        self.assertEqual(fundamental_unit(2).describe(), "1+1·√2, norm -1")
        self.assertEqual(fundamental_unit(5).describe(), "(1+1·√5)/2, norm -1")
        unit = fundamental_unit(7)
        self.assertEqual((unit.a, unit.b, unit.denominator), (8, 3, 1))
        for p in (2, 3, 5, 7, 13, 19, 97, 151):
            self.assertEqual(abs(fundamental_unit(p).pell_residual()), 1)

    def test_norm_sign_by_residue(self):
        for p in (7, 11, 19, 23, 31):
            self.assertTrue(is_totally_positive(p))
        for p in (2, 5, 13, 17, 29):
            self.assertFalse(is_totally_positive(p))

    def test_rejects_composite(self):
        with self.assertRaises(InvalidInputError):
            h_real(15)

class ZetaTests(unittest.TestCase):
    """zeta_F(-1) from the divisor sum"""

    def test_small_primes(self):
        self.assertEqual(zeta_minus_one_real_quadratic(2), Fraction(1, 12))
        self.assertEqual(zeta_minus_one_real_quadratic(3), Fraction(1, 6))
        self.assertEqual(zeta_minus_one_real_quadratic(5), Fraction(1, 30))
        self.assertEqual(zeta_minus_one_real_quadratic(7), Fraction(2, 3))
        self.assertEqual(zeta_minus_one_real_quadratic(13), Fraction(1, 6))

    def test_field_invariant_bundle(self):
        field = field_invariants_qsqrtp(7)
        self.assertEqual(field.degree, 2)
        self.assertEqual(field.zeta_minus_one, Fraction(2, 3))
        self.assertEqual((field.class_number, field.narrow_class_number), (1, 2))

    def test_field_invariants_validation(self):
        """zeta sign, h | h+ and a power-of-two index are enforced"""
        with self.assertRaises(ValidationError):
            FieldInvariants(degree=2, zeta_minus_one="-1/12", class_number=1, narrow_class_number=1)
        with self.assertRaises(ValidationError):
            FieldInvariants(degree=2, zeta_minus_one="1/12", class_number=2, narrow_class_number=3)
        with self.assertRaises(ValidationError):
            FieldInvariants(degree=2, zeta_minus_one="1/12", class_number=1, narrow_class_number=3)

class QuadFieldTests(unittest.TestCase):

    def test_descriptor(self):
        field = quad_field(-39)
        self.assertEqual(field.discriminant, -39)
        self.assertEqual(field.signature, Signature.IMAGINARY)
        self.assertEqual(field_discriminant(7), 28)
        self.assertEqual(field_discriminant(13), 13)
        with self.assertRaises(InvalidInputError):
            quad_field(1)

if __name__ == "__main__":
    unittest.main()
