"""
export-config: the assisted config equivalent to the Q(sqrt p) pipeline input
"""

import argparse
import json

from quatclass.assisted import config_document, export_qsqrtp_config
from quatclass.cli.base_command import BaseCommand, CommandResult
from quatclass.cli.report_command import integer_argument
from quatclass.selectivity import SpinorGenusTag

class ExportConfigCommand(BaseCommand):
    """Prints the config document itself; --out writes it to a file"""

    def __init__(self):
        super().__init__(name="export-config", description="Export an assisted config for F = Q(sqrt p)")

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--p", type=integer_argument, required=True)
        parser.add_argument("--genus", choices=[t.value for t in SpinorGenusTag],
                            default=SpinorGenusTag.PRINCIPAL.value)
        parser.add_argument("--out", default=None, help="Write the config document to this path")
        self.add_format_argument(parser)

    def run(self, args: argparse.Namespace) -> CommandResult:
        document = config_document(export_qsqrtp_config(args.p, SpinorGenusTag(args.genus)))
        text = json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text + "\n")
        envelope = self.envelope(inputs={"p": args.p, "genus": args.genus}, result=document)
        return CommandResult(envelope=envelope, text=text)
