"""
batch: reports for every prime up to a bound, with identity checks
"""

import argparse

from quatclass.cli.base_command import BaseCommand, CommandResult
from quatclass.cli.envelope import check_entries
from quatclass.cli.render import render_batch
from quatclass.cli.report_command import integer_argument
from quatclass.pipeline import CheckSelection, batch

class BatchCommand(BaseCommand):
    """One row per prime; exit 1 with the smallest failing prime detailed"""

    def __init__(self):
        super().__init__(name="batch", description="Sweep all primes p <= p_max with identity checks")

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--p-max", dest="p_max", type=integer_argument, required=True,
                            help="Upper bound (inclusive)")
        parser.add_argument("--p-min", dest="p_min", type=integer_argument, default=2,
                            help="Lower bound (inclusive, default 2)")
        parser.add_argument("--checks", choices=[c.value for c in CheckSelection],
                            default=CheckSelection.ALL.value)
        parser.add_argument("--out", default=None, help="Also write the JSON envelope to this path")
        self.add_format_argument(parser)

    def run(self, args: argparse.Namespace) -> CommandResult:
        summary = batch(args.p_min, args.p_max, CheckSelection(args.checks), raise_on_failure=False)
        failed = next((row for row in summary.rows if row.failed_check is not None), None)
        checks = []
        if failed is not None:
            checks = [{
                "name": failed.failed_check,
                "status": "fail",
                "detail": f"p={failed.p}: " + "; ".join(f"{k}={v}" for k, v in sorted(failed.diagnostics.items())),
            }]
            checks += check_entries(r for r in failed.checks if not r.passed and r.name != failed.failed_check)
        envelope = self.envelope(
            inputs={"p_min": args.p_min, "p_max": args.p_max, "checks": args.checks},
            result=summary.model_dump(mode="json"),
            checks=checks,
        )
        return CommandResult(envelope=envelope, text=render_batch(summary),
                             exit_code=0 if summary.passed else 1, out_path=args.out)
