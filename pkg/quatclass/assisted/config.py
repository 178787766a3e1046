"""
Assisted-mode configuration
A single JSON document describing a totally real field, an order genus and
the CM orders to sum over. Exact integers and rationals only: numbers are
JSON integers, decimal digit strings, "a/b" strings or {"num", "den"} objects.
"""

import json
from enum import Enum
from math import prod
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

from pydantic import Field, ValidationError, model_validator

from quatclass.arith import ExactInt, ExactModel
from quatclass.cm.orders import CMLocalData, ResolvedCMOrder, m_p
from quatclass.errors import ConfigValidationError, UnsupportedCaseError
from quatclass.invariants.fields import FieldInvariants
from quatclass.mass.profile import OrderLocalProfile, OrderProfile

class Which(str, Enum):
    """Class numbers an assisted evaluation computes"""
    H1 = "h1"
    H_SC = "h_sc"
    BOTH = "both"

    @property
    def wants_h1(self) -> bool:
        return self in (Which.H1, Which.BOTH)

    @property
    def wants_h_sc(self) -> bool:
        return self in (Which.H_SC, Which.BOTH)

class AssistedOrder(ExactModel):
    """Order data besides the field: local profiles, [O_F^ : Nr(O^x)] and u(O)"""

    locals: List[OrderLocalProfile] = Field(default_factory=list)
    norm_unit_index: ExactInt = Field(default=1, ge=1)
    u_value: ExactInt = Field(default=1, ge=1)

class AssistedCMOrder(CMLocalData):
    """
    A CM order with explicit data. Either m_product is given, or the product
    of m_p(B) is computed over the order's primes from the Eichler symbol,
    with m_values overriding single primes.
    """

    mu_order: Optional[ExactInt] = Field(default=None, ge=2)
    unit_index: ExactInt = Field(ge=1)
    class_number: ExactInt = Field(ge=1)
    m_product: Optional[ExactInt] = Field(default=None, ge=0)
    m_values: Dict[str, ExactInt] = Field(default_factory=dict)
    selective: ExactInt = Field(default=0, ge=0, le=1)
    deltas: Dict[str, ExactInt] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_order(self) -> "AssistedCMOrder":
        if self.mu_order is not None and self.mu_order % 2:
            raise ValueError("mu_order must be even")
        if any(v < 0 for v in self.m_values.values()):
            raise ValueError("m_values must be nonnegative")
        if any(d not in (0, 1) for d in self.deltas.values()):
            raise ValueError("deltas must be 0 or 1")
        if not self.selective and any(d != 1 for d in self.deltas.values()):
            raise ValueError("a non-selective order has delta 1 in every spinor genus")
        return self

    def embedding_product(self, locals: List[OrderLocalProfile]) -> int:
        """prod over p | d(O) of m_p(B); every other prime contributes 1"""
        if self.m_product is not None:
            return self.m_product
        return prod(m_p(self, local, self.m_values.get(local.prime_id)) for local in locals)

    def resolve(self, genus_label: str, locals: List[OrderLocalProfile]) -> ResolvedCMOrder:
        return ResolvedCMOrder(
            label=self.label,
            mu_order=self.mu_order,
            unit_index=self.unit_index,
            class_number=self.class_number,
            m_product=self.embedding_product(locals),
            selective=self.selective,
            delta=self.deltas.get(genus_label, 1),
        )

class AssistedConfig(ExactModel):
    """Complete input of an assisted evaluation"""

    field: FieldInvariants
    order: AssistedOrder = Field(default_factory=AssistedOrder)
    cm_orders: List[AssistedCMOrder] = Field(default_factory=list)
    which: Which = Which.BOTH
    target_genus_label: str = Field(default="principal", min_length=1)

    @model_validator(mode="after")
    def _check_config(self) -> "AssistedConfig":
        labels = [b.label for b in self.cm_orders]
        if len(labels) != len(set(labels)):
            raise ValueError("cm_orders labels must be distinct")
        primes = {local.prime_id for local in self.order.locals}
        for b in self.cm_orders:
            if self.which.wants_h1 and b.mu_order is None:
                raise ValueError(f"{b.label}: mu_order is required to compute h1")
            if b.selective and self.target_genus_label not in b.deltas:
                raise ValueError(f"{b.label}: selective order needs deltas['{self.target_genus_label}']")
            unknown = set(b.m_values) - primes
            if unknown:
                raise ValueError(f"{b.label}: m_values for primes not in order.locals: {sorted(unknown)}")
        return self

    def order_profile(self) -> OrderProfile:
        return OrderProfile(
            field=self.field,
            locals=self.order.locals,
            norm_unit_index=self.order.norm_unit_index,
            u_value=self.order.u_value,
        )

def _error_path(location) -> str:
    return ".".join(str(part) for part in location) or "$"

def validation_to_config_error(error: ValidationError, prefix: str = "") -> ConfigValidationError:
    entries = []
    for item in error.errors():
        location = (prefix,) + tuple(item["loc"]) if prefix else tuple(item["loc"])
        entries.append((_error_path(location), item["msg"]))
    return ConfigValidationError(entries)

def _reject_float(text: str):
    raise ValueError(f"float {text} is not accepted; write exact numbers as 'a/b' strings")

def parse_config_text(text: str) -> Dict[str, Any]:
    """Decode the JSON document, refusing floats"""
    try:
        data = json.loads(text, parse_float=_reject_float)
    except ValueError as e:
        raise ConfigValidationError([("$", str(e))])
    except RecursionError:
        raise ConfigValidationError([("$", "the config document is nested too deeply")])
    if not isinstance(data, dict):
        raise ConfigValidationError([("$", "the config document must be a JSON object")])
    return data

def read_config_file(path: Path) -> str:
    """UTF-8 text of a config file; unreadable or undecodable files are config errors"""
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ConfigValidationError([("$", f"the config file is not valid UTF-8: {e.reason} at byte {e.start}")])
    except OSError as e:
        raise ConfigValidationError([("$", f"cannot read {path}: {e.strerror or e}")])

def load_assisted_config(source: Union[str, Path, Mapping[str, Any]]) -> AssistedConfig:
    """
    Load and validate an assisted config from a path, a JSON string or a mapping.

    Raises:
        ConfigValidationError: malformed document, one entry per offending field path
        UnsupportedCaseError: some local profile has e_p = 0
    """
    if isinstance(source, Path):
        data = parse_config_text(read_config_file(source))
    elif isinstance(source, str):
        data = parse_config_text(source)
    else:
        data = dict(source)

    try:
        config = AssistedConfig.model_validate(data)
    except ValidationError as e:
        raise validation_to_config_error(e)

    zero = [local.prime_id for local in config.order.locals if local.eichler_invariant == 0]
    if zero:
        raise UnsupportedCaseError(UnsupportedCaseError.POLICY, {"primes": ", ".join(zero)})

    try:
        config.order_profile()
    except ValidationError as e:
        raise validation_to_config_error(e, prefix="order")
    return config

def config_document(config: AssistedConfig) -> Dict[str, Any]:
    """JSON-ready form of a config; load_assisted_config reads it back"""
    return config.model_dump(mode="json", exclude_none=True)
