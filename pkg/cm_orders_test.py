#!/usr/bin/env python3
"""
quatclass CM Order Testing Suite
Tests class ratios, the Eichler symbol, local embedding numbers and the B-tables
"""

import unittest
import sys
import os
from fractions import Fraction

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '.')))

from pydantic import ValidationError

from quatclass.cm import (
    DYADIC, RAMIFIED, ClassRatio, ClassSymbol, CMLocalData, CMOrderEntry, Regime,
    big_M, eichler_symbol, m_p, qsqrtp_b_tables, regime_of, resolved_big_M,
)
from quatclass.cm.tables import B_1_2, B_1_3, O_F_SQRT_MINUS_1, O_K1, O_K2, O_K3
from quatclass.errors import InvalidInputError, MissingOverrideError, UnresolvedClassDatumError
from quatclass.mass import OrderLocalProfile

def _entry(**overrides) -> CMOrderEntry:
    fields = dict(label="B", mu_order=4, unit_index=2, class_number=2)
    fields.update(overrides)
    return CMOrderEntry(**fields)

class ClassRatioTests(unittest.TestCase):
    """h(B)/h(F) as printed and as evaluated"""

    def test_describe(self):
        twice = ClassRatio(symbol=ClassSymbol.H_MINUS_P, constant=2, kron2_coefficient=-1)
        self.assertEqual(twice.describe(), "(2-(2|p))h(-p)")
        half = ClassRatio(symbol=ClassSymbol.H_MINUS_3P, constant=Fraction(1, 2))
        self.assertEqual(half.describe(), "h(-3p)/2")
        self.assertEqual(ClassRatio(symbol=ClassSymbol.ONE).describe(), "1")
        self.assertEqual(ClassRatio(symbol=ClassSymbol.H_MINUS_2P).describe(), "h(-2p)")

    def test_value(self):
        twice = ClassRatio(symbol=ClassSymbol.H_MINUS_P, constant=2, kron2_coefficient=-1)
        self.assertEqual(twice.value(1, {ClassSymbol.H_MINUS_P: 1}), 1)
        self.assertEqual(twice.value(-1, {ClassSymbol.H_MINUS_P: 3}), 9)

class CMOrderEntryTests(unittest.TestCase):
    """Structural invariants of a table row"""

    def test_rejects_odd_mu(self):
        with self.assertRaises(ValidationError):
            _entry(mu_order=3)

    def test_exactly_one_class_datum(self):
        with self.assertRaises(ValidationError):
            _entry(class_ratio=ClassRatio(symbol=ClassSymbol.ONE))
        with self.assertRaises(ValidationError):
            _entry(class_number=None)

    def test_delta_columns(self):
        """Non-selective rows have Delta = 1 twice; selective rows exactly one 1"""
        with self.assertRaises(ValidationError):
            _entry(delta_nonprincipal=0)
        with self.assertRaises(ValidationError):
            _entry(in_spinor_genus_field=True)
        row = _entry(in_spinor_genus_field=True, delta_nonprincipal=0)
        self.assertEqual(row.selective, 1)
        self.assertEqual((row.delta(True), row.delta(False)), (1, 0))

    def test_resolve(self):
        row = _entry(class_number=None, class_ratio=ClassRatio(symbol=ClassSymbol.H_MINUS_3P,
                                                              constant=Fraction(1, 2)))
        resolved = row.resolve(1, -1, {ClassSymbol.H_MINUS_3P: 4})
        self.assertEqual(resolved.class_number, 2)
        self.assertEqual(resolved_big_M(resolved), 1)

class LocalEmbeddingTests(unittest.TestCase):
    """Eichler symbol and m_p(B)"""

    def setUp(self):
        self.order = CMLocalData(label="B", conductor_valuations={"c": 1},
                                 artin_symbols={"r": -1, "s": 1})

    def test_eichler_symbol(self):
        self.assertEqual(eichler_symbol(self.order, "c"), 1)
        self.assertEqual(eichler_symbol(self.order, "r"), -1)
        with self.assertRaises(InvalidInputError):
            eichler_symbol(self.order, "unknown")

    def test_m_p_by_shape(self):
        ramified = OrderLocalProfile(prime_id="r", residue_norm=3, eichler_invariant=-1,
                                     discriminant_valuation=1)
        level = OrderLocalProfile(prime_id="s", residue_norm=2, eichler_invariant=1,
                                  discriminant_valuation=1)
        matrix = OrderLocalProfile(prime_id="x", residue_norm=5, eichler_invariant=2,
                                   discriminant_valuation=0)
        self.assertEqual(m_p(self.order, ramified), 2)
        self.assertEqual(m_p(self.order, level), 2)
        self.assertEqual(m_p(self.order, matrix), 1)

    def test_m_p_needs_override(self):
        other = OrderLocalProfile(prime_id="r", residue_norm=3, eichler_invariant=-1,
                                  discriminant_valuation=2)
        with self.assertRaises(MissingOverrideError):
            m_p(self.order, other)
        self.assertEqual(m_p(self.order, other, override=3), 3)

    def test_big_M(self):
        self.assertEqual(big_M(_entry(), 1, 1), 1)
        constant = _entry(class_number=None, class_ratio=ClassRatio(symbol=ClassSymbol.ONE))
        self.assertEqual(big_M(constant, 3, 2), 3)
        symbolic = _entry(class_number=None, class_ratio=ClassRatio(symbol=ClassSymbol.H_MINUS_P))
        with self.assertRaises(UnresolvedClassDatumError):
            big_M(symbolic, 1, 1)

class BTableTests(unittest.TestCase):
    """Regime split and table contents"""

    def test_regimes(self):
        self.assertEqual(regime_of(2), Regime.P2)
        self.assertEqual(regime_of(3), Regime.P3)
        self.assertEqual(regime_of(5), Regime.P5)
        self.assertEqual(regime_of(13), Regime.P1MOD4)
        self.assertEqual(regime_of(7), Regime.P3MOD4)
        with self.assertRaises(InvalidInputError):
            regime_of(9)

    def test_p3mod4_table(self):
        table = qsqrtp_b_tables(7)
        self.assertEqual(table.labels(), [O_F_SQRT_MINUS_1, B_1_2, O_K1, O_K3, O_K2])
        self.assertEqual(len(table.b1_entries), 4)
        self.assertEqual(table.entry(O_K2).mu_order, 2)
        self.assertEqual(table.entry(O_F_SQRT_MINUS_1).h_ratio_text(), "(2-(2|p))h(-p)")
        self.assertEqual(table.entry(O_K1).artin_symbols, {DYADIC: 1, RAMIFIED: -1})

    def test_b12_delta_follows_kronecker(self):
        """(2|7) = 1 puts B_{1,2} in the principal genus, (2|11) = -1 in the other"""
        self.assertEqual(qsqrtp_b_tables(7).entry(B_1_2).delta_principal, 1)
        self.assertEqual(qsqrtp_b_tables(11).entry(B_1_2).delta_principal, 0)

    def test_p3_table(self):
        table = qsqrtp_b_tables(3)
        self.assertIsNone(table.b_entries)
        self.assertEqual(table.entry(O_K1).mu_order, 12)
        self.assertEqual(table.entry(B_1_3).conductor_valuations, {RAMIFIED: 1})
        with self.assertRaises(InvalidInputError):
            table.entry(O_K2)

    def test_table_row_columns(self):
        row = qsqrtp_b_tables(13).entry(O_K3).table_row()
        self.assertEqual(row, {"label": O_K3, "mu": 6, "w": 3, "h_ratio": "h(-3p)/2", "s": 0,
                               "delta_principal": 1, "delta_nonprincipal": 1})

if __name__ == "__main__":
    unittest.main()
