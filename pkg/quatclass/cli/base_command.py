"""
Base Command Class
Abstract base class for all CLI commands of the modular command system
"""

import argparse
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from quatclass.cli.envelope import OutputEnvelope

class CommandResult(BaseModel):
    """What a command hands back to the dispatcher"""

    envelope: OutputEnvelope
    text: Optional[str] = None
    exit_code: int = Field(default=0, ge=0, le=3)
    out_path: Optional[str] = None

class BaseCommand(ABC):
    """
    Abstract base class for CLI commands

    A command declares its arguments on a sub-parser and turns parsed
    arguments into a CommandResult carrying the JSON envelope and, for
    --format text, the rendered tables.
    """

    def __init__(self, name: str, description: str = ""):
        """
        Initialize base command

        Args:
            name: Sub-command name as typed on the command line
            description: One-line help text
        """
        self.name = name
        self.description = description
        self.enabled = True

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """
        Declare the command's arguments

        Args:
            parser: Sub-parser created for this command
        """
        pass

    @abstractmethod
    def run(self, args: argparse.Namespace) -> CommandResult:
        """
        Execute the command

        Args:
            args: Parsed arguments

        Returns:
            CommandResult with envelope, optional text rendering and exit code
        """
        pass

    def get_info(self) -> Dict[str, Any]:
        """
        Get command information

        Returns:
            Dictionary with command metadata
        """
        return {
            "name": self.name,
            "description": self.description,
            "enabled": self.enabled,
            "type": self.__class__.__name__
        }

    def enable(self):
        """Enable the command"""
        self.enabled = True

    def disable(self):
        """Disable the command"""
        self.enabled = False

    @staticmethod
    def add_format_argument(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--format", choices=["json", "text"], default="json",
                            help="Output format (default: json)")

    def envelope(self, inputs: Dict[str, Any], result: Any,
                 checks: Optional[List[Dict[str, str]]] = None) -> OutputEnvelope:
        """Wrap a payload in the versioned output envelope"""
        return OutputEnvelope(command=self.name, inputs=inputs, result=result, checks=checks or [])
