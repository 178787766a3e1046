# Command-line front end package
from typing import Optional, Sequence

from quatclass.cli.base_command import BaseCommand, CommandResult
from quatclass.cli.command_registry import CommandRegistry
from quatclass.cli.envelope import SCHEMA_VERSION, OutputEnvelope, check_entries, error_envelope
from quatclass.cli.report_command import ReportCommand
from quatclass.cli.batch_command import BatchCommand
from quatclass.cli.invariant_command import InvariantCommand
from quatclass.cli.assisted_command import AssistedCommand
from quatclass.cli.export_config_command import ExportConfigCommand
from quatclass.cli.serve_command import ServeCommand

def create_registry() -> CommandRegistry:
    """Registry with every built-in command"""
    registry = CommandRegistry()
    for command in (ReportCommand(), BatchCommand(), InvariantCommand(),
                    AssistedCommand(), ExportConfigCommand(), ServeCommand()):
        registry.register_command(command)
    return registry

def main(argv: Optional[Sequence[str]] = None) -> int:
    return create_registry().execute(argv)
