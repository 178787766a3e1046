"""
report: full Q(sqrt p) report for one prime
"""

import argparse

from quatclass.arith import parse_exact_int
from quatclass.cli.base_command import BaseCommand, CommandResult
from quatclass.cli.envelope import check_entries
from quatclass.cli.render import render_report
from quatclass.pipeline import CheckSelection, report

def integer_argument(value: str) -> int:
    """argparse type: an exact decimal integer; primality is checked downstream"""
    try:
        return parse_exact_int(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))

class ReportCommand(BaseCommand):
    """Masses, B-tables, h1 and h_sc per spinor genus, type numbers and checks"""

    def __init__(self):
        super().__init__(name="report", description="Class number report for F = Q(sqrt p)")

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--p", type=integer_argument, required=True, help="A prime p")
        parser.add_argument("--checks", choices=[c.value for c in CheckSelection],
                            default=CheckSelection.ALL.value, help="Identity checks to attach")
        self.add_format_argument(parser)

    def run(self, args: argparse.Namespace) -> CommandResult:
        result = report(args.p, CheckSelection(args.checks))
        payload = result.model_dump(mode="json", exclude={"identities_checked"})
        envelope = self.envelope(
            inputs={"p": args.p, "checks": args.checks},
            result=payload,
            checks=check_entries(result.identities_checked),
        )
        failed = any(not r.passed for r in result.identities_checked)
        return CommandResult(envelope=envelope, text=render_report(result), exit_code=1 if failed else 0)
