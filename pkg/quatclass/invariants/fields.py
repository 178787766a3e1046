"""
Field descriptors
QuadField for Q(sqrt d) and FieldInvariants, the exact data of a totally
real field that the mass and class number formulas consume
"""

from enum import Enum
from fractions import Fraction

from pydantic import Field, model_validator

from quatclass.arith import ExactInt, ExactModel, RationalField, is_squarefree
from quatclass.errors import InvalidInputError

class Signature(str, Enum):
    """Signature of a quadratic field"""
    REAL = "real"
    IMAGINARY = "imaginary"

class QuadField(ExactModel):
    """Q(sqrt d) with squarefree d != 0, 1 and its field discriminant"""

    radicand: int
    discriminant: int
    signature: Signature

    @model_validator(mode="after")
    def _consistent(self) -> "QuadField":
        if self.radicand in (0, 1) or not is_squarefree(self.radicand):
            raise ValueError(f"radicand {self.radicand} must be squarefree and != 0, 1")
        if self.discriminant != field_discriminant(self.radicand):
            raise ValueError("discriminant does not match radicand")
        expected = Signature.IMAGINARY if self.radicand < 0 else Signature.REAL
        if self.signature != expected:
            raise ValueError("signature must be imaginary iff radicand < 0")
        return self

def field_discriminant(d: int) -> int:
    """Discriminant of Q(sqrt d): d if d = 1 mod 4, else 4d"""
    return d if d % 4 == 1 else 4 * d

def quad_field(d: int) -> QuadField:
    """
    Build the descriptor of Q(sqrt d).

    Raises:
        InvalidInputError: d is 0, 1 or not squarefree
    """
    if d in (0, 1) or not is_squarefree(d):
        raise InvalidInputError(f"d = {d} is not a squarefree integer != 0, 1")
    return QuadField(
        radicand=d,
        discriminant=field_discriminant(d),
        signature=Signature.IMAGINARY if d < 0 else Signature.REAL,
    )

class FieldInvariants(ExactModel):
    """
    Exact invariants of a totally real field F of degree n.

    zeta_minus_one is the signed value zeta_F(-1); its sign is (-1)^n.
    The narrow class number is h times a power of two.
    """

    degree: ExactInt = Field(ge=1)
    zeta_minus_one: RationalField
    class_number: ExactInt = Field(ge=1)
    narrow_class_number: ExactInt = Field(ge=1)

    @model_validator(mode="after")
    def _check_invariants(self) -> "FieldInvariants":
        if self.zeta_minus_one == 0:
            raise ValueError("zeta_minus_one must be nonzero")
        expected_sign = 1 if self.degree % 2 == 0 else -1
        if (self.zeta_minus_one > 0) != (expected_sign > 0):
            raise ValueError(f"sign of zeta_minus_one must be (-1)^degree = {expected_sign}")
        if self.narrow_class_number % self.class_number:
            raise ValueError("class_number must divide narrow_class_number")
        index = self.narrow_class_number // self.class_number
        if index & (index - 1):
            raise ValueError("narrow_class_number / class_number must be a power of 2")
        return self

    @property
    def abs_zeta(self) -> Fraction:
        """|zeta_F(-1)| as it enters the mass formulas"""
        return abs(self.zeta_minus_one)
