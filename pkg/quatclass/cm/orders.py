"""
CM orders
CMOrderEntry describes a CM O_F-order B: roots of unity, unit index, class
number datum, conductor and splitting data, and its selectivity flags.
ResolvedCMOrder is the fully explicit form the class number formulas sum over.
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional

from pydantic import Field, model_validator

from quatclass.arith import ExactInt, ExactModel, RationalField, assert_integral, format_rational
from quatclass.errors import InvalidInputError, MissingOverrideError, UnresolvedClassDatumError
from quatclass.mass.profile import LocalShape, OrderLocalProfile

class ClassSymbol(str, Enum):
    """Imaginary quadratic class number a symbolic h(B)/h(F) is a multiple of"""
    ONE = "1"
    H_MINUS_P = "h(-p)"
    H_MINUS_2P = "h(-2p)"
    H_MINUS_3P = "h(-3p)"

class ClassRatio(ExactModel):
    """
    h(B)/h(F) = (constant + kron2_coefficient * (2|p)) * symbol.

    (2 - (2|p)) h(-p) is ClassRatio(symbol=H_MINUS_P, constant=2, kron2_coefficient=-1),
    h(-3p)/2 is ClassRatio(symbol=H_MINUS_3P, constant=1/2).
    """

    symbol: ClassSymbol
    constant: RationalField = Fraction(1)
    kron2_coefficient: RationalField = Fraction(0)

    def coefficient(self, kron2: int) -> Fraction:
        return self.constant + self.kron2_coefficient * kron2

    def value(self, kron2: int, class_numbers: Dict[ClassSymbol, int]) -> Fraction:
        """Numeric ratio once (2|p) and the auxiliary class numbers are known"""
        base = 1 if self.symbol == ClassSymbol.ONE else class_numbers[self.symbol]
        return self.coefficient(kron2) * base

    def describe(self) -> str:
        """The ratio as printed in the tables: '(2-(2|p))h(-p)', 'h(-3p)/2', '1'"""
        if self.kron2_coefficient:
            sign = "-" if self.kron2_coefficient < 0 else "+"
            factor = "" if abs(self.kron2_coefficient) == 1 else format_rational(abs(self.kron2_coefficient))
            scalar = f"({format_rational(self.constant)}{sign}{factor}(2|p))"
        else:
            scalar = "" if self.constant == 1 else format_rational(self.constant)
        if self.symbol == ClassSymbol.ONE:
            return scalar or "1"
        if scalar.startswith("1/"):
            return f"{self.symbol.value}/{scalar[2:]}"
        return f"{scalar}{self.symbol.value}"

class CMLocalData(ExactModel):
    """Label, conductor valuations and Artin symbols of B: what the Eichler symbol reads"""

    label: str = Field(min_length=1)
    conductor_valuations: Dict[str, ExactInt] = Field(default_factory=dict)
    artin_symbols: Dict[str, ExactInt] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_local_data(self) -> "CMLocalData":
        if any(v < 0 for v in self.conductor_valuations.values()):
            raise ValueError("conductor valuations must be nonnegative")
        if any(v not in (-1, 0, 1) for v in self.artin_symbols.values()):
            raise ValueError("Artin symbols must be -1, 0 or 1")
        return self

class CMOrderEntry(CMLocalData):
    """A row of a B-table, with a class number datum that may still be symbolic"""

    mu_order: ExactInt = Field(ge=2)
    unit_index: ExactInt = Field(ge=1)
    class_number: Optional[ExactInt] = Field(default=None, ge=1)
    class_ratio: Optional[ClassRatio] = None
    in_spinor_genus_field: bool = False
    delta_principal: ExactInt = Field(default=1, ge=0, le=1)
    delta_nonprincipal: ExactInt = Field(default=1, ge=0, le=1)

    @model_validator(mode="after")
    def _check_entry(self) -> "CMOrderEntry":
        if self.mu_order % 2:
            raise ValueError("mu_order must be even")
        if (self.class_number is None) == (self.class_ratio is None):
            raise ValueError("give exactly one of class_number and class_ratio")
        deltas = (self.delta_principal, self.delta_nonprincipal)
        if not self.in_spinor_genus_field and deltas != (1, 1):
            raise ValueError(f"{self.label}: a non-selective order has both deltas equal to 1")
        if self.in_spinor_genus_field and sum(deltas) != 1:
            raise ValueError(f"{self.label}: a selective order is selected by exactly one spinor genus")
        return self

    @property
    def selective(self) -> int:
        """s(G, K) as 0/1"""
        return 1 if self.in_spinor_genus_field else 0

    def delta(self, principal: bool) -> int:
        return self.delta_principal if principal else self.delta_nonprincipal

    def h_ratio_text(self) -> str:
        if self.class_ratio is not None:
            return self.class_ratio.describe()
        return str(self.class_number)

    def table_row(self) -> Dict[str, Any]:
        """Columns of the printed B-tables"""
        return {
            "label": self.label,
            "mu": self.mu_order,
            "w": self.unit_index,
            "h_ratio": self.h_ratio_text(),
            "s": self.selective,
            "delta_principal": self.delta_principal,
            "delta_nonprincipal": self.delta_nonprincipal,
        }

    def resolve(self, h_F: int, kron2: int, class_numbers: Dict[ClassSymbol, int],
                principal: bool = True, m_product: int = 1) -> "ResolvedCMOrder":
        """
        Fix h(B) = ratio * h(F) and Delta for one spinor genus.

        Raises:
            IntegralityError: the ratio does not give an integral h(B)
        """
        if self.class_number is not None:
            h_B = self.class_number
        else:
            value = self.class_ratio.value(kron2, class_numbers) * h_F
            h_B = assert_integral(value, f"h({self.label})", {"ratio": self.h_ratio_text(), "h_F": h_F})
        return ResolvedCMOrder(
            label=self.label,
            mu_order=self.mu_order,
            unit_index=self.unit_index,
            class_number=h_B,
            m_product=m_product,
            selective=self.selective,
            delta=self.delta(principal),
        )

class ResolvedCMOrder(ExactModel):
    """B with explicit h(B), prod m_p(B), s and Delta for the target spinor genus"""

    label: str = Field(min_length=1)
    mu_order: Optional[ExactInt] = Field(default=None, ge=2)
    unit_index: ExactInt = Field(ge=1)
    class_number: ExactInt = Field(ge=1)
    m_product: ExactInt = Field(default=1, ge=0)
    selective: ExactInt = Field(default=0, ge=0, le=1)
    delta: ExactInt = Field(default=1, ge=0, le=1)

    @model_validator(mode="after")
    def _check_resolved(self) -> "ResolvedCMOrder":
        if self.mu_order is not None and self.mu_order % 2:
            raise ValueError("mu_order must be even")
        if not self.selective and self.delta != 1:
            raise ValueError(f"{self.label}: delta must be 1 for a non-selective order")
        return self

def eichler_symbol(order: CMLocalData, prime_id: str) -> int:
    """
    (B/p): 1 when p divides the conductor of B, the Artin symbol (K/p) otherwise.

    Raises:
        InvalidInputError: no conductor or splitting data for prime_id
    """
    if order.conductor_valuations.get(prime_id, 0) > 0:
        return 1
    if prime_id not in order.artin_symbols:
        raise InvalidInputError(f"{order.label}: no splitting data at prime '{prime_id}'")
    return order.artin_symbols[prime_id]

def m_p(order: CMLocalData, local: OrderLocalProfile, override: Optional[int] = None) -> int:
    """
    Local optimal embedding number m_p(B) into an order of squarefree Eichler
    level: 1 - (B/p) at primes of d(D), 1 + (B/p) at primes of the level, 1
    elsewhere. Any other local shape needs an explicit override.

    Raises:
        MissingOverrideError: non-Eichler local shape and no override
    """
    if override is not None:
        if isinstance(override, bool) or not isinstance(override, int) or override < 0:
            raise InvalidInputError(f"m_p override must be a nonnegative integer, got {override!r}")
        return override
    shape = local.shape
    if shape == LocalShape.MATRIX:
        return 1
    if shape == LocalShape.OTHER:
        raise MissingOverrideError(
            f"{order.label}: local order at '{local.prime_id}' is not of squarefree Eichler "
            f"level (e={local.eichler_invariant}, v={local.discriminant_valuation}); supply m_p"
        )
    symbol = eichler_symbol(order, local.prime_id)
    if shape == LocalShape.RAMIFIED_MAXIMAL:
        return 1 - symbol
    return 1 + symbol

def big_M(order: CMOrderEntry, h_F: int, m_product: Fraction) -> Fraction:
    """
    M(B) = h(B)/w(B) * prod_p m_p(B).

    A ratio that is a pure number is resolved against h_F here; ratios in the
    imaginary quadratic class numbers must be resolved first.

    Raises:
        UnresolvedClassDatumError: h(B) still depends on h(-p), h(-2p) or h(-3p)
    """
    if order.class_number is not None:
        h_B = Fraction(order.class_number)
    elif order.class_ratio.symbol == ClassSymbol.ONE and not order.class_ratio.kron2_coefficient:
        h_B = order.class_ratio.constant * h_F
    else:
        raise UnresolvedClassDatumError(
            f"{order.label}: h(B)/h(F) = {order.h_ratio_text()} must be resolved before M(B)"
        )
    return h_B / order.unit_index * Fraction(m_product)

def resolved_big_M(order: ResolvedCMOrder) -> Fraction:
    """M(B) of a resolved order"""
    return Fraction(order.class_number * order.m_product, order.unit_index)
