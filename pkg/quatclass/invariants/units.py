"""
Fundamental units of real quadratic fields Q(sqrt p)
The unit is the product of the complete quotients over one period of the
continued fraction of a reduced generator of O_F
"""

from fractions import Fraction
from functools import lru_cache

from pydantic import Field, model_validator

from quatclass.arith import ExactModel, isqrt, require_prime

class FundamentalUnit(ExactModel):
    """epsilon = (a + b*sqrt(p)) / denominator with denominator in {1, 2}"""

    p: int
    a: int
    b: int
    denominator: int = Field(ge=1, le=2)
    norm_sign: int
    period_length: int = Field(ge=1)

    @model_validator(mode="after")
    def _pell(self) -> "FundamentalUnit":
        if self.a * self.a - self.p * self.b * self.b != self.norm_sign * self.denominator ** 2:
            raise ValueError("unit does not satisfy the Pell identity")
        return self

    @property
    def x(self) -> Fraction:
        return Fraction(self.a, self.denominator)

    @property
    def y(self) -> Fraction:
        return Fraction(self.b, self.denominator)

    def pell_residual(self) -> Fraction:
        """x^2 - p*y^2, exactly +-1"""
        return self.x * self.x - self.p * self.y * self.y

    def describe(self) -> str:
        sign = "+1" if self.norm_sign > 0 else "-1"
        body = f"{self.a}+{self.b}·√{self.p}"
        if self.denominator == 2:
            body = f"({body})/2"
        return f"{body}, norm {sign}"

@lru_cache(maxsize=None)
def fundamental_unit(p: int) -> FundamentalUnit:
    """
    Fundamental unit of Q(sqrt p) via the continued fraction of a reduced
    generator: s + sqrt(p) if p != 1 mod 4, (a + sqrt(p))/2 with a the
    largest odd integer below sqrt(p) otherwise.

    Args:
        p: Prime

    Returns:
        FundamentalUnit with norm sign (+1 exactly when p = 3 mod 4)
    """
    require_prime(p)
    s = isqrt(p)
    if p % 4 == 1:
        P0, Q0 = (s if s % 2 == 1 else s - 1), 2
    else:
        P0, Q0 = s, 1

    # Running product of the numerators P_k + sqrt(p), as X + Y sqrt(p)
    X, Y, denominator = 1, 0, 1
    P, Q = P0, Q0
    length = 0
    while True:
        X, Y = X * P + p * Y, X + Y * P
        denominator *= Q
        partial = (P + s) // Q
        P = partial * Q - P
        Q = (p - P * P) // Q
        length += 1
        if (P, Q) == (P0, Q0):
            break

    x = Fraction(X, denominator)
    y = Fraction(Y, denominator)
    common = max(x.denominator, y.denominator)
    return FundamentalUnit(
        p=p,
        a=int(x * common),
        b=int(y * common),
        denominator=common,
        norm_sign=-1 if length % 2 else 1,
        period_length=length,
    )

def is_totally_positive(p: int) -> bool:
    """Whether the fundamental unit of Q(sqrt p) has norm +1"""
    return fundamental_unit(p).norm_sign == 1
