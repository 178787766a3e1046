"""
invariant: raw quadratic field invariants
"""

import argparse
from typing import Any, Callable, Dict, Tuple

from quatclass.arith import format_rational, rational_to_json
from quatclass.cli.base_command import BaseCommand, CommandResult
from quatclass.cli.report_command import integer_argument
from quatclass.invariants import (
    fundamental_unit, h_imag, h_real, narrow_class_number, zeta_minus_one_real_quadratic,
)

def _zeta(p: int) -> Tuple[Any, str]:
    value = zeta_minus_one_real_quadratic(p)
    return rational_to_json(value), format_rational(value)

def _unit(p: int) -> Tuple[Any, str]:
    unit = fundamental_unit(p)
    text = unit.describe()
    payload = unit.model_dump(mode="json")
    payload.update(description=text, x=rational_to_json(unit.x), y=rational_to_json(unit.y))
    return payload, text

def _plain(func: Callable[[int], int]) -> Callable[[int], Tuple[Any, str]]:
    def evaluate(n: int) -> Tuple[Any, str]:
        value = func(n)
        return value, str(value)
    return evaluate

QUERIES: Dict[str, Callable[[int], Tuple[Any, str]]] = {
    "zeta": _zeta,
    "h-imag": _plain(h_imag),
    "h-real": _plain(h_real),
    "h-plus": _plain(narrow_class_number),
    "unit": _unit,
}

class InvariantCommand(BaseCommand):
    """zeta_F(-1), h(Q(sqrt d)) for d < 0, h and h+ of Q(sqrt p), fundamental unit"""

    def __init__(self):
        super().__init__(name="invariant", description="Query a single quadratic field invariant")

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--what", choices=list(QUERIES), required=True)
        parser.add_argument("--arg", type=integer_argument, required=True,
                            help="Prime p, or a negative squarefree d for h-imag")
        self.add_format_argument(parser)

    def run(self, args: argparse.Namespace) -> CommandResult:
        value, text = QUERIES[args.what](args.arg)
        envelope = self.envelope(
            inputs={"what": args.what, "arg": args.arg},
            result={"what": args.what, "arg": args.arg, "value": value},
        )
        return CommandResult(envelope=envelope, text=text)
