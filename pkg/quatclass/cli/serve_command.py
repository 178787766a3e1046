"""
serve: run the HTTP surface with uvicorn
"""

import argparse

import uvicorn

from quatclass.cli.base_command import BaseCommand, CommandResult
from quatclass.config.settings import get_settings

class ServeCommand(BaseCommand):

    def __init__(self):
        super().__init__(name="serve", description="Serve reports and invariants over HTTP")

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        settings = get_settings()
        parser.add_argument("--host", default=settings.host)
        parser.add_argument("--port", type=int, default=settings.port)
        parser.add_argument("--reload", action="store_true", help="Reload on code changes (development)")

    def run(self, args: argparse.Namespace) -> CommandResult:
        settings = get_settings()
        uvicorn.run(
            "quatclass.api.server:app",
            host=args.host,
            port=args.port,
            reload=args.reload,
            log_level=settings.log_level.lower(),
        )
        envelope = self.envelope(inputs={"host": args.host, "port": args.port}, result={"stopped": True})
        return CommandResult(envelope=envelope, text="server stopped")
