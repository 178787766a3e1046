"""
assisted: masses and class numbers from a user-supplied config document
"""

import argparse
from pathlib import Path

from quatclass.assisted import evaluate, load_assisted_config
from quatclass.cli.base_command import BaseCommand, CommandResult
from quatclass.cli.render import render_assisted
from quatclass.errors import InvalidInputError

class AssistedCommand(BaseCommand):

    def __init__(self):
        super().__init__(name="assisted", description="Evaluate h1 and h_sc from an assisted config")

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--config", required=True, help="Path of the JSON config document")
        self.add_format_argument(parser)

    def run(self, args: argparse.Namespace) -> CommandResult:
        path = Path(args.config)
        if not path.is_file():
            raise InvalidInputError(f"config file not found: {path}")
        result = evaluate(load_assisted_config(path))
        envelope = self.envelope(inputs={"config": args.config}, result=result.model_dump(mode="json"))
        return CommandResult(envelope=envelope, text=render_assisted(result))
