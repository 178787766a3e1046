#!/usr/bin/env python3
"""
quatclass Assisted Mode Testing Suite
Tests config loading and validation, evaluation and the Q(sqrt p) export
"""

import json
import unittest
import sys
import os
import tempfile
from pathlib import Path

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '.')))

from quatclass.assisted import (
    AssistedCMOrder, Which, config_document, evaluate, export_qsqrtp_config,
    load_assisted_config, parse_config_text,
)
from quatclass.errors import ConfigValidationError, InvalidInputError, UnsupportedCaseError
from quatclass.mass import OrderLocalProfile
from quatclass.selectivity import SpinorGenusTag

def exported(p: int, genus: SpinorGenusTag = SpinorGenusTag.PRINCIPAL) -> dict:
    return config_document(export_qsqrtp_config(p, genus))

class RoundTripTests(unittest.TestCase):
    """Exported pipeline inputs evaluate to the pipeline's values"""

    def test_p13(self):
        result = evaluate(load_assisted_config(exported(13)))
        self.assertEqual(result.which, Which.H1)
        self.assertEqual(result.h1, 1)
        self.assertIsNone(result.h_sc)

    def test_p7_both_genera(self):
        principal = evaluate(load_assisted_config(exported(7)))
        self.assertEqual((principal.h1, principal.h_sc), (2, 2))
        other = evaluate(load_assisted_config(exported(7, SpinorGenusTag.NONPRINCIPAL)))
        self.assertEqual((other.h1, other.h_sc), (1, 1))
        self.assertEqual(other.target_genus_label, "nonprincipal")

    def test_membership_from_units(self):
        """B1 is |mu| > 2, B is w > 1"""
        result = evaluate(load_assisted_config(exported(7)))
        self.assertNotIn("O_K2", result.b1_labels)
        self.assertIn("O_K2", result.b_labels)

    def test_json_text_and_file(self):
        text = json.dumps(exported(13))
        self.assertEqual(evaluate(load_assisted_config(text)).h1, 1)
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "q13.json"
            path.write_text(text, encoding="utf-8")
            self.assertEqual(evaluate(load_assisted_config(path)).h1, 1)

    def test_nonprincipal_needs_two_genera(self):
        with self.assertRaises(InvalidInputError):
            export_qsqrtp_config(13, SpinorGenusTag.NONPRINCIPAL)

class ValidationTests(unittest.TestCase):
    """Malformed documents are refused with field paths"""

    def test_missing_narrow_class_number(self):
        document = exported(13)
        del document["field"]["narrow_class_number"]
        with self.assertRaises(ConfigValidationError) as ctx:
            load_assisted_config(document)
        self.assertIn("field.narrow_class_number", [path for path, _ in ctx.exception.errors])
        self.assertEqual(ctx.exception.exit_code, 2)

    def test_floats_rejected(self):
        text = json.dumps(exported(13)).replace('"num": "1", "den": "6"', '"num": 0.5, "den": "6"')
        with self.assertRaises(ConfigValidationError):
            parse_config_text(text)
        with self.assertRaises(ConfigValidationError):
            parse_config_text("[1, 2]")

    def test_undecodable_file(self):
        """Invalid UTF-8 in a config file is a config error, not a crash"""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bad.json"
            path.write_bytes(b'{"field": "\xff\xfe"}')
            with self.assertRaises(ConfigValidationError) as ctx:
                load_assisted_config(path)
        self.assertIn("UTF-8", ctx.exception.message)
        self.assertEqual(ctx.exception.exit_code, 2)

    def test_unreadable_path(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(ConfigValidationError):
                load_assisted_config(Path(tmp))

    def test_deeply_nested_document(self):
        """Nesting beyond the parser's depth is refused at the document root"""
        with self.assertRaises(ConfigValidationError) as ctx:
            parse_config_text("[" * 100000 + "]" * 100000)
        self.assertEqual(ctx.exception.errors[0][0], "$")

    def test_vanishing_eichler_invariant(self):
        document = exported(13)
        document["order"] = {
            "locals": [{"prime_id": "q", "residue_norm": 2, "eichler_invariant": 0,
                        "discriminant_valuation": 2}],
            "norm_unit_index": 1,
            "u_value": 1,
        }
        with self.assertRaises(UnsupportedCaseError) as ctx:
            load_assisted_config(document)
        self.assertEqual(ctx.exception.message, UnsupportedCaseError.POLICY)

    def test_selective_order_needs_target_delta(self):
        document = exported(7)
        for order in document["cm_orders"]:
            order["deltas"] = {}
        with self.assertRaises(ConfigValidationError) as ctx:
            load_assisted_config(document)
        self.assertIn("deltas['principal']", ctx.exception.message)

    def test_mu_required_for_h1(self):
        document = exported(13)
        del document["cm_orders"][0]["mu_order"]
        with self.assertRaises(ConfigValidationError):
            load_assisted_config(document)
        document["which"] = "h_sc"
        config = load_assisted_config(document)
        self.assertFalse(config.which.wants_h1)

class EmbeddingProductTests(unittest.TestCase):

    def test_computed_and_overridden(self):
        level = OrderLocalProfile(prime_id="q", residue_norm=2, eichler_invariant=1, discriminant_valuation=1)
        order = AssistedCMOrder(label="B", unit_index=2, class_number=1, artin_symbols={"q": 1})
        self.assertEqual(order.embedding_product([level]), 2)
        override = order.model_copy(update={"m_values": {"q": 0}})
        self.assertEqual(override.embedding_product([level]), 0)
        fixed = order.model_copy(update={"m_product": 5})
        self.assertEqual(fixed.embedding_product([level]), 5)

if __name__ == "__main__":
    unittest.main()
