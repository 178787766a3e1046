"""
Exact rational values
Fraction-based Rational plus the pydantic field types that parse and
serialize exact numbers without ever passing through floats
"""

from fractions import Fraction
from typing import Annotated, Any, Dict, Mapping, Optional, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer

from quatclass.errors import IntegralityError

# Lowest terms and positive denominator are guaranteed by Fraction
Rational = Fraction

def parse_rational(value: Any) -> Fraction:
    """
    Parse an exact rational from int, Fraction, "a/b" digit string or
    {"num": "...", "den": "..."} mapping. Floats and bools are rejected.

    Args:
        value: Raw value

    Returns:
        Fraction in lowest terms
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError("floats are not accepted; give an exact 'a/b' string")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Mapping):
        if set(value) != {"num", "den"}:
            raise ValueError("rational mapping needs exactly 'num' and 'den'")
        return Fraction(parse_exact_int(value["num"]), parse_exact_int(value["den"]))
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        if not sep:
            return Fraction(parse_exact_int(num))
        denominator = parse_exact_int(den)
        if denominator == 0:
            raise ValueError("zero denominator")
        return Fraction(parse_exact_int(num), denominator)
    raise ValueError(f"cannot read {type(value).__name__} as an exact rational")

def parse_exact_int(value: Any) -> int:
    """Parse an integer from int or a decimal digit string (optional sign)"""
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError("floats are not accepted; give an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip()
        digits = text[1:] if text[:1] in "+-" else text
        if not digits.isdigit():
            raise ValueError(f"'{value}' is not a decimal integer")
        return int(text)
    raise ValueError(f"cannot read {type(value).__name__} as an integer")

def rational_to_json(value: Fraction) -> Dict[str, str]:
    """Serialize as {"num": ..., "den": ...} decimal digit strings"""
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}

def format_rational(value: Fraction) -> str:
    """Human form: '1/12', '2', '-3/4'"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"

def assert_integral(value: Union[Fraction, int], quantity: str,
                    diagnostics: Optional[Dict[str, Any]] = None,
                    positive: bool = True) -> int:
    """
    Turn an exact rational known to be a class number into an int.

    Args:
        value: The evaluated formula
        quantity: Name used in the error message
        diagnostics: Intermediate values dumped on failure
        positive: Also require value >= 1

    Returns:
        The integer value

    Raises:
        IntegralityError: value is not an integer (or not positive)
    """
    value = Fraction(value)
    dump = dict(diagnostics or {})
    dump[quantity] = format_rational(value)
    if value.denominator != 1:
        raise IntegralityError(f"{quantity} = {format_rational(value)} is not an integer", dump)
    if positive and value < 1:
        raise IntegralityError(f"{quantity} = {value} is not a positive integer", dump)
    return value.numerator

# Pydantic field types
RationalField = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(rational_to_json, when_used="json"),
]

ExactInt = Annotated[int, BeforeValidator(parse_exact_int)]

class ExactModel(BaseModel):
    """Immutable pydantic base for value types holding exact numbers"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True, extra="forbid")
