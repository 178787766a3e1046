#!/usr/bin/env python3
"""
quatclass Command-Line Testing Suite
Tests the command registry, the output envelope and every command's exit codes
"""

import io
import json
import unittest
from unittest import mock
import sys
import os
import tempfile
from pathlib import Path

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '.')))

from quatclass.assisted import config_document, export_qsqrtp_config
from quatclass.cli import BaseCommand, CommandRegistry, ReportCommand, create_registry
from quatclass.config.settings import reset_settings

def run_cli(*argv):
    """Run one invocation; returns (exit code, stdout, stderr)"""
    out, err = io.StringIO(), io.StringIO()
    code = create_registry().execute(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()

class RegistryTests(unittest.TestCase):
    """Command registration and lifecycle"""

    def setUp(self):
        self.registry = CommandRegistry()
        self.report = ReportCommand()

    def test_register_and_disable(self):
        self.registry.register_command(self.report)
        self.assertIn("report", self.registry.get_command_names())
        self.assertEqual(self.registry.get_command_info()[0]["type"], "ReportCommand")

        self.registry.disable_command("report")
        self.assertFalse(self.report.enabled)
        code = self.registry.execute(["report", "--p", "7"], stdout=io.StringIO(), stderr=io.StringIO())
        self.assertEqual(code, 2)

        self.registry.enable_command("report")
        self.assertTrue(self.report.enabled)
        self.assertTrue(self.registry.unregister_command("report"))
        self.assertFalse(self.registry.unregister_command("report"))

    def test_rejects_non_commands(self):
        with self.assertRaises(ValueError):
            self.registry.register_command(object())

    def test_all_commands_registered(self):
        names = create_registry().get_command_names()
        self.assertEqual(names, ["report", "batch", "invariant", "assisted", "export-config", "serve"])
        self.assertTrue(all(isinstance(create_registry().get_command(n), BaseCommand) for n in names))

class ReportCommandTests(unittest.TestCase):

    def test_p7_json(self):
        code, out, _ = run_cli("report", "--p", "7", "--format", "json")
        self.assertEqual(code, 0)
        envelope = json.loads(out)
        self.assertEqual(envelope["schema_version"], "1")
        self.assertEqual(envelope["command"], "report")
        self.assertEqual(envelope["inputs"]["p"], 7)
        self.assertEqual(envelope["result"]["per_genus"]["principal"]["h1"], 2)
        self.assertTrue(all(c["status"] == "pass" for c in envelope["checks"]))

    def test_p2_zeta(self):
        code, out, _ = run_cli("report", "--p", "2")
        self.assertEqual(code, 0)
        result = json.loads(out)["result"]
        self.assertEqual(result["field"]["zeta_minus_one"], {"num": "1", "den": "12"})
        self.assertEqual(result["per_genus"]["principal"]["h1"], 1)

    def test_byte_stable(self):
        self.assertEqual(run_cli("report", "--p", "11")[1], run_cli("report", "--p", "11")[1])

    def test_composite(self):
        code, out, err = run_cli("report", "--p", "8")
        self.assertEqual(code, 2)
        self.assertIn("not prime", err)
        self.assertEqual(json.loads(out)["error"]["error"], "InvalidInputError")

    def test_text_tables(self):
        code, out, _ = run_cli("report", "--p", "7", "--format", "text")
        self.assertEqual(code, 0)
        for header in ("|μ(B)|", "w(B)", "h(B)/h(F)", "Δ+"):
            self.assertIn(header, out)
        self.assertIn("(2-(2|p))h(-p)", out)
        self.assertIn("type number |Tp| = 3", out)

    def test_usage_error(self):
        self.assertEqual(run_cli("report", "--p", "seven")[0], 2)
        self.assertEqual(run_cli("report")[0], 2)

class BatchCommandTests(unittest.TestCase):

    def setUp(self):
        os.environ["QUATCLASS_BATCH_WORKERS"] = "1"
        reset_settings()

    def tearDown(self):
        os.environ.pop("QUATCLASS_BATCH_WORKERS", None)
        os.environ.pop("QUATCLASS_PMAX_CEILING", None)
        reset_settings()

    def test_rows_to_three(self):
        code, out, _ = run_cli("batch", "--p-max", "3")
        self.assertEqual(code, 0)
        rows = json.loads(out)["result"]["rows"]
        self.assertEqual([row["p"] for row in rows], [2, 3])

    def test_to_100_with_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "batch.json"
            code, out, _ = run_cli("batch", "--p-max", "100", "--checks", "all",
                                   "--out", str(path), "--format", "text")
            self.assertEqual(code, 0)
            self.assertIn("25 primes, all checks passed", out)
            written = json.loads(path.read_text(encoding="utf-8"))
            self.assertEqual(len(written["result"]["rows"]), 25)
            self.assertEqual(written["checks"], [])

    def test_ceiling_from_environment(self):
        os.environ["QUATCLASS_PMAX_CEILING"] = "50"
        reset_settings()
        code, _, err = run_cli("batch", "--p-max", "100")
        self.assertEqual(code, 2)
        self.assertIn("ceiling", err)

class InvariantCommandTests(unittest.TestCase):

    def test_zeta(self):
        code, out, _ = run_cli("invariant", "--what", "zeta", "--arg", "2")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["result"]["value"], {"num": "1", "den": "12"})
        self.assertEqual(run_cli("invariant", "--what", "zeta", "--arg", "2", "--format", "text")[1], "1/12\n")

    def test_h_imag(self):
        code, out, _ = run_cli("invariant", "--what", "h-imag", "--arg", "-39", "--format", "text")
        self.assertEqual((code, out), (0, "4\n"))

    def test_unit(self):
        code, out, _ = run_cli("invariant", "--what", "unit", "--arg", "3")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["result"]["value"]["description"], "2+1·√3, norm +1")

    def test_h_real_and_plus(self):
        self.assertEqual(run_cli("invariant", "--what", "h-real", "--arg", "79", "--format", "text")[1], "3\n")
        self.assertEqual(run_cli("invariant", "--what", "h-plus", "--arg", "79", "--format", "text")[1], "6\n")

    def test_bad_argument(self):
        self.assertEqual(run_cli("invariant", "--what", "h-imag", "--arg", "-4")[0], 2)
        self.assertEqual(run_cli("invariant", "--what", "genus", "--arg", "7")[0], 2)

class AssistedCommandTests(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def _write(self, document) -> str:
        path = self.dir / "config.json"
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    def test_exported_p13(self):
        path = str(self.dir / "q13.json")
        self.assertEqual(run_cli("export-config", "--p", "13", "--out", path)[0], 0)
        code, out, _ = run_cli("assisted", "--config", path)
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["result"]["h1"], 1)

    def test_text_output(self):
        path = self._write(config_document(export_qsqrtp_config(7)))
        code, out, _ = run_cli("assisted", "--config", path, "--format", "text")
        self.assertEqual(code, 0)
        self.assertIn("h1 = 2", out)
        self.assertIn("h_sc = 2", out)

    def test_missing_narrow_class_number(self):
        document = config_document(export_qsqrtp_config(13))
        del document["field"]["narrow_class_number"]
        code, out, err = run_cli("assisted", "--config", self._write(document))
        self.assertEqual(code, 2)
        self.assertIn("field.narrow_class_number", err)
        fields = json.loads(out)["error"]["fields"]
        self.assertEqual(fields[0]["path"], "field.narrow_class_number")

    def test_vanishing_eichler_invariant(self):
        document = config_document(export_qsqrtp_config(13))
        document["order"]["locals"] = [{"prime_id": "q", "residue_norm": 2, "eichler_invariant": 0,
                                        "discriminant_valuation": 2}]
        code, _, err = run_cli("assisted", "--config", self._write(document))
        self.assertEqual(code, 2)
        self.assertIn("not supported", err)

    def test_undecodable_file(self):
        path = self.dir / "bad.json"
        path.write_bytes(b'{"field": "\xff\xfe"}')
        code, out, err = run_cli("assisted", "--config", str(path))
        self.assertEqual(code, 2)
        self.assertIn("UTF-8", err)
        self.assertEqual(json.loads(out)["error"]["error"], "ConfigValidationError")

    def test_deeply_nested_file(self):
        path = self.dir / "deep.json"
        path.write_text("[" * 100000 + "]" * 100000, encoding="utf-8")
        code, _, err = run_cli("assisted", "--config", str(path))
        self.assertEqual(code, 2)
        self.assertNotIn("internal error", err)

    def test_missing_file(self):
        self.assertEqual(run_cli("assisted", "--config", str(self.dir / "absent.json"))[0], 2)

class ExitCodeTests(unittest.TestCase):
    """Unexpected failures map to exit 3"""

    def test_internal_error(self):
        with mock.patch("quatclass.cli.report_command.report", side_effect=RuntimeError("boom")):
            code, _, err = run_cli("report", "--p", "7")
        self.assertEqual(code, 3)
        self.assertIn("boom", err)

if __name__ == "__main__":
    unittest.main()
