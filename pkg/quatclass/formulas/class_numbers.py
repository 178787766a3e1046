"""
Class number formulas
h^1(O) and h_sc(O) assembled from the masses and the CM-order sums, together
with the spinor and classical trace formula values they are built from
"""

from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional

from pydantic import Field, model_validator

from quatclass.arith import ExactInt, ExactModel, assert_integral, format_rational
from quatclass.cm.orders import ResolvedCMOrder, resolved_big_M
from quatclass.errors import InvalidInputError
from quatclass.mass.formulas import mass1, mass_sc, require_eichler_nonzero, scl_size
from quatclass.mass.profile import OrderProfile
from quatclass.utils.logger import setup_logger

logger = setup_logger(__name__)

class FormulaInput(ExactModel):
    """Summation data of the h^1 and h_sc formulas for one order"""

    order: OrderProfile
    b1_list: List[ResolvedCMOrder] = Field(default_factory=list)
    b_list: Optional[List[ResolvedCMOrder]] = None
    h_F: ExactInt = Field(ge=1)
    h_plus: ExactInt = Field(ge=1)

    @model_validator(mode="after")
    def _check_input(self) -> "FormulaInput":
        if self.h_F != self.order.field.class_number:
            raise ValueError("h_F does not match the field invariants")
        if self.h_plus != self.order.field.narrow_class_number:
            raise ValueError("h_plus does not match the field invariants")
        if self.b_list is not None:
            missing = {b.label for b in self.b1_list} - {b.label for b in self.b_list}
            if missing:
                raise ValueError(f"B1 orders missing from the B list: {sorted(missing)}")
        return self

def spinor_trace_sum(order: ResolvedCMOrder, scl: int, delta: int, s: int) -> Fraction:
    """2^s Delta h(B) / |SCl(O)| * prod m_p(B)"""
    return Fraction(2 ** s * delta * order.class_number * order.m_product, scl)

def classical_trace_rhs(order: ResolvedCMOrder) -> Fraction:
    """h(B) * prod m_p(B)"""
    return Fraction(order.class_number * order.m_product)

def _rational_dump(values: Mapping[str, Fraction]) -> Dict[str, Any]:
    return {key: format_rational(value) for key, value in values.items()}

def h1_value(data: FormulaInput) -> Fraction:
    """
    2 Mass^1(O) + 1/(4 h(F)) * sum over B1 of 2^s Delta (|mu(B)| - 2) M(B),
    before the integrality check
    """
    require_eichler_nonzero(data.order)
    total = Fraction(0)
    for b in data.b1_list:
        if b.mu_order is None:
            raise InvalidInputError(f"{b.label}: |mu(B)| is required for h1")
        total += 2 ** b.selective * b.delta * (b.mu_order - 2) * resolved_big_M(b)
    return 2 * mass1(data.order) + total / (4 * data.h_F)

def h1(data: FormulaInput) -> int:
    """
    h^1(O) for an order with every e_p(O) != 0.

    Raises:
        UnsupportedCaseError: some e_p(O) = 0
        IntegralityError: the formula is not a positive integer
    """
    value = h1_value(data)
    terms = {f"term[{b.label}]": 2 ** b.selective * b.delta * (b.mu_order - 2) * resolved_big_M(b)
             for b in data.b1_list}
    terms["2*mass1"] = 2 * mass1(data.order)
    result = assert_integral(value, "h1", _rational_dump(terms) | {"h_F": data.h_F})
    logger.debug(f"h1 = {result}")
    return result

def h_sc_value(data: FormulaInput) -> Fraction:
    """Mass_sc(O) + 1/(2 h+(F)) * sum over B of 2^s Delta (w(B) - 1) M(B)"""
    require_eichler_nonzero(data.order)
    if data.b_list is None:
        raise InvalidInputError("h_sc needs the list of CM orders with w(B) > 1")
    total = Fraction(0)
    for b in data.b_list:
        total += 2 ** b.selective * b.delta * (b.unit_index - 1) * resolved_big_M(b)
    return mass_sc(data.order) + total / (2 * data.h_plus)

def h_sc(data: FormulaInput) -> int:
    """
    h_sc(O), the number of ideal classes in the spinor class of O.

    Raises:
        UnsupportedCaseError: some e_p(O) = 0
        IntegralityError: the formula is not a positive integer
    """
    value = h_sc_value(data)
    terms = {f"term[{b.label}]": 2 ** b.selective * b.delta * (b.unit_index - 1) * resolved_big_M(b)
             for b in data.b_list}
    terms["mass_sc"] = mass_sc(data.order)
    result = assert_integral(value, "h_sc", _rational_dump(terms) | {"h_plus": data.h_plus})
    logger.debug(f"h_sc = {result}")
    return result

def spinor_inner_sums(data: FormulaInput) -> Dict[str, Fraction]:
    """Per-B sums over ideal classes of m(B, O_l(I), O_l(I)^x), by the spinor trace formula"""
    scl = scl_size(data.order)
    return {b.label: spinor_trace_sum(b, scl, b.delta, b.selective) for b in data.b1_list}

def h1_general_thm(data: FormulaInput, inner_sums: Mapping[str, Fraction],
                   complete: bool = False) -> Fraction:
    """
    2 Mass^1(O) + u(O)/4 * sum over B1 of (|mu(B)| - 2)/w(B) * inner_sums[B].

    Args:
        data: Order and B1 list; Delta and s are not used here
        inner_sums: Sum over [I] in Cl(O) of m(B, O_l(I), O_l(I)^x), keyed by label
        complete: Assert the result is a positive integer

    Raises:
        InvalidInputError: an inner sum is missing
        IntegralityError: complete is set and the value is not a positive integer
    """
    total = Fraction(0)
    for b in data.b1_list:
        if b.label not in inner_sums:
            raise InvalidInputError(f"no inner embedding sum for {b.label}")
        if b.mu_order is None:
            raise InvalidInputError(f"{b.label}: |mu(B)| is required for h1")
        total += Fraction(b.mu_order - 2, b.unit_index) * Fraction(inner_sums[b.label])
    value = 2 * mass1(data.order) + Fraction(data.order.u_value, 4) * total
    if complete:
        assert_integral(value, "h1", {"2*mass1": format_rational(2 * mass1(data.order))})
    return value
