"""
quatclass error hierarchy
Every error carries the CLI exit code it maps to
"""

from typing import Any, Dict, List, Optional, Tuple

class QuatClassError(Exception):
    """Base class for all quatclass errors"""

    exit_code = 3

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.diagnostics = diagnostics or {}

    def to_dict(self) -> Dict[str, Any]:
        """Structured form used by the CLI envelope and the HTTP surface"""
        return {
            "error": self.__class__.__name__,
            "message": self.message,
            "diagnostics": {k: str(v) for k, v in self.diagnostics.items()},
        }

class InvalidInputError(QuatClassError, ValueError):
    """Input outside the domain of an operation (composite p, bad radicand, ...)"""

    exit_code = 2

class UnsupportedCaseError(InvalidInputError):
    """A profile with Eichler invariant 0 somewhere.

    Whether the spinor trace formula holds there is open, so such profiles are
    refused rather than evaluated.
    """

    POLICY = ("orders with a vanishing Eichler invariant are not supported: "
              "the spinor trace formula is not known to hold when e_p(O) = 0")

class MissingOverrideError(InvalidInputError):
    """Non-Eichler local shape without an explicit m_p value"""

class UnresolvedClassDatumError(InvalidInputError):
    """A symbolic h(B)/h(F) reached a place needing an explicit integer"""

class ConfigValidationError(InvalidInputError):
    """Assisted configuration rejected; carries one entry per offending field path"""

    def __init__(self, errors: List[Tuple[str, str]]):
        self.errors = list(errors)
        summary = "; ".join(f"{path}: {msg}" for path, msg in self.errors)
        super().__init__(f"invalid assisted config: {summary}")

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload["fields"] = [{"path": path, "message": msg} for path, msg in self.errors]
        return payload

class IntegralityError(QuatClassError, ArithmeticError):
    """A class number evaluated to a non-integer (inconsistent upstream data)"""

    exit_code = 3

class ConsistencyError(QuatClassError, ArithmeticError):
    """An internal identity between computed quantities failed"""

    exit_code = 3

class IdentityCheckError(QuatClassError):
    """A batch identity check failed for some prime"""

    exit_code = 1

    def __init__(self, p: int, check: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(f"identity check '{check}' failed at p={p}", diagnostics)
        self.p = p
        self.check = check
