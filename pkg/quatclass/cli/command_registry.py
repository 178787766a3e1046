"""
Command Registry - Modular Command Management System
Manages registration, argument parsing and dispatch of CLI commands
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO

from quatclass.cli.base_command import BaseCommand, CommandResult
from quatclass.cli.envelope import error_envelope
from quatclass.errors import QuatClassError
from quatclass.utils.logger import log_with_extra, setup_logger

EXIT_INTERNAL = 3

class CommandRegistry:
    """
    Registry for managing CLI commands

    This class provides a centralized system for:
    1. Registering commands and building the argument parser from them
    2. Dispatching parsed arguments to the selected command
    3. Mapping errors onto the exit codes 0, 1, 2 and 3
    """

    def __init__(self, prog: str = "quatclass"):
        self.prog = prog
        self.commands: Dict[str, BaseCommand] = {}
        self.logger = setup_logger(__name__)

        self.logger.debug("Command registry initialized")

    def register_command(self, command: BaseCommand):
        """
        Register a new command

        Args:
            command: Command instance; its name is the sub-command
        """
        if not isinstance(command, BaseCommand):
            raise ValueError("Command must inherit from BaseCommand")

        if command.name in self.commands:
            self.logger.warning(f"Command '{command.name}' already exists, replacing...")

        self.commands[command.name] = command
        self.logger.debug(f"Registered command: {command.name} ({command.__class__.__name__})")

    def unregister_command(self, name: str) -> bool:
        """
        Unregister a command

        Returns:
            True if the command was removed, False if not found
        """
        if name not in self.commands:
            self.logger.warning(f"Command '{name}' not found for removal")
            return False
        del self.commands[name]
        self.logger.debug(f"Unregistered command: {name}")
        return True

    def get_command(self, name: str) -> Optional[BaseCommand]:
        return self.commands.get(name)

    def enable_command(self, name: str) -> bool:
        command = self.get_command(name)
        if command:
            command.enable()
            self.logger.info(f"Command '{name}' enabled")
            return True
        return False

    def disable_command(self, name: str) -> bool:
        command = self.get_command(name)
        if command:
            command.disable()
            self.logger.info(f"Command '{name}' disabled")
            return True
        return False

    def get_command_names(self) -> List[str]:
        return list(self.commands.keys())

    def get_command_info(self) -> List[Dict[str, Any]]:
        """
        Get information about all registered commands

        Returns:
            List of command information dictionaries
        """
        return [command.get_info() for command in self.commands.values()]

    def build_parser(self) -> argparse.ArgumentParser:
        """Argument parser with one sub-parser per enabled command"""
        parser = argparse.ArgumentParser(
            prog=self.prog,
            description="Spinor class numbers of totally definite quaternion orders"
        )
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
        subparsers.required = True
        for name, command in self.commands.items():
            if not command.enabled:
                continue
            sub = subparsers.add_parser(name, help=command.description, description=command.description)
            command.add_arguments(sub)
        return parser

    def execute(self, argv: Optional[Sequence[str]] = None,
                stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
        """
        Parse argv, run the selected command and write its output

        Args:
            argv: Arguments without the program name (default: sys.argv[1:])
            stdout: Stream for the envelope or text tables
            stderr: Stream for error messages

        Returns:
            Exit code in {0, 1, 2, 3}
        """
        stdout = stdout or sys.stdout
        stderr = stderr or sys.stderr
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            # argparse exits 2 on usage errors and 0 on --help
            return int(e.code or 0)

        command = self.commands[args.command]
        inputs = {k: v for k, v in vars(args).items() if k != "command"}
        fmt = getattr(args, "format", "json")

        try:
            result = command.run(args)
        except QuatClassError as e:
            log_with_extra(self.logger, "error", f"{command.name} failed: {e.message}",
                           command=command.name, error=type(e).__name__, exit_code=e.exit_code)
            stderr.write(f"error: {e.message}\n")
            if fmt == "json":
                stdout.write(error_envelope(command.name, inputs, e).to_json() + "\n")
            return e.exit_code
        except Exception as e:
            self.logger.exception(f"Unexpected failure in {command.name}")
            stderr.write(f"internal error: {e}\n")
            return EXIT_INTERNAL

        self._write(result, fmt, stdout)
        return result.exit_code

    @staticmethod
    def _write(result: CommandResult, fmt: str, stdout: TextIO) -> None:
        document = result.envelope.to_json()
        if result.out_path:
            Path(result.out_path).write_text(document + "\n", encoding="utf-8")
        if fmt == "text" and result.text is not None:
            stdout.write(result.text.rstrip("\n") + "\n")
        else:
            stdout.write(document + "\n")
