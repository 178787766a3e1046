"""
Q(sqrt p) report pipeline
For a prime p: field invariants, masses, B-tables, h^1 and h_sc per spinor
genus, type numbers and identity checks for the maximal orders of the
quaternion algebra over Q(sqrt p) ramified only at the two infinite places
"""

import time
from typing import Any, Dict, List, Optional

from pydantic import Field, field_serializer, model_validator

from quatclass.arith import ExactModel, assert_integral, is_squarefree, kronecker, require_prime
from quatclass.cm.orders import ClassSymbol, ResolvedCMOrder
from quatclass.cm.tables import QSqrtPBTable, Regime, qsqrtp_b_tables
from quatclass.config.settings import get_settings
from quatclass.errors import ConsistencyError, InvalidInputError
from quatclass.formulas import FormulaInput, h1, h_sc
from quatclass.invariants import FieldInvariants, fundamental_unit, h_imag
from quatclass.mass import MassSummary, mass_summary, maximal_order_profile_qsqrtp
from quatclass.pipeline.closed_forms import type_number_total
from quatclass.pipeline.identities import (
    SMALL_PRIME_VALUES, CheckSelection, IdentityResult, run_report_identities,
)
from quatclass.selectivity import SpinorGenusTag, noncyclic_type_genera, spinor_genus_group_order_qsqrtp
from quatclass.utils.logger import log_report_summary, log_with_extra, setup_logger

logger = setup_logger(__name__)

_SYMBOL_MULTIPLIER = {ClassSymbol.H_MINUS_P: 1, ClassSymbol.H_MINUS_2P: 2, ClassSymbol.H_MINUS_3P: 3}

class GenusResult(ExactModel):
    """h^1, h_sc and the number of types in one spinor genus"""

    h1: int = Field(ge=1)
    h_sc: int = Field(ge=1)
    type_count: int = Field(ge=1)

class ClassNumberReport(ExactModel):
    """Everything computed for one prime p"""

    p: int
    regime: Regime
    field: FieldInvariants
    fundamental_unit: str
    auxiliary_class_numbers: Dict[str, int]
    kron2p: Optional[int] = None
    character_values: Dict[str, int] = Field(default_factory=dict)
    masses: MassSummary
    spinor_genus_count: int = Field(ge=1, le=2)
    per_genus: Dict[str, GenusResult]
    type_number_total: int = Field(ge=1)
    noncyclic_types: Optional[Dict[str, SpinorGenusTag]] = None
    b_tables: QSqrtPBTable
    identities_checked: List[IdentityResult] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_report(self) -> "ClassNumberReport":
        if len(self.per_genus) != self.spinor_genus_count:
            raise ValueError("one per_genus entry per spinor genus")
        if sum(g.type_count for g in self.per_genus.values()) != self.type_number_total:
            raise ValueError("type counts do not add up to the type number")
        if any(g.h_sc != g.type_count for g in self.per_genus.values()):
            raise ValueError("h_sc must equal the type count of its spinor genus")
        return self

    @field_serializer("b_tables")
    def _table_columns(self, table: QSqrtPBTable) -> Dict[str, Any]:
        return {
            "regime": table.regime.value,
            "b1": [row.table_row() for row in table.b1_entries],
            "b": None if table.b_entries is None else [row.table_row() for row in table.b_entries],
        }

def auxiliary_class_numbers(p: int) -> Dict[ClassSymbol, int]:
    """h(-p), h(-2p), h(-3p), skipping the ones whose radicand is not squarefree"""
    values = {}
    for symbol, k in _SYMBOL_MULTIPLIER.items():
        if is_squarefree(k * p):
            values[symbol] = h_imag(-k * p)
    return values

def resolve_table(table: QSqrtPBTable, h_F: int, kron2: int,
                  class_numbers: Dict[ClassSymbol, int],
                  genus_tag: SpinorGenusTag) -> Dict[str, Optional[List[ResolvedCMOrder]]]:
    """Explicit B1 and B lists for one spinor genus; every m_p is 1 since d(O) = O_F"""
    principal = SpinorGenusTag(genus_tag).is_principal

    def resolve(rows):
        return [row.resolve(h_F, kron2, class_numbers, principal=principal) for row in rows]

    return {
        "b1": resolve(table.b1_entries),
        "b": None if table.b_entries is None else resolve(table.b_entries),
    }

def formula_input_qsqrtp(p: int, genus_tag: SpinorGenusTag = SpinorGenusTag.PRINCIPAL) -> FormulaInput:
    """FormulaInput for a maximal order over Q(sqrt p) in the given spinor genus"""
    require_prime(p)
    order = maximal_order_profile_qsqrtp(p)
    table = qsqrtp_b_tables(p)
    kron2 = kronecker(2, p) if p % 2 else 0
    resolved = resolve_table(table, order.field.class_number, kron2, auxiliary_class_numbers(p), genus_tag)
    return FormulaInput(
        order=order,
        b1_list=resolved["b1"],
        b_list=resolved["b"],
        h_F=order.field.class_number,
        h_plus=order.field.narrow_class_number,
    )

def _genus_results(p: int, regime: Regime, genus_tags: List[SpinorGenusTag]) -> Dict[str, GenusResult]:
    results = {}
    for tag in genus_tags:
        data = formula_input_qsqrtp(p, tag)
        value_h1 = h1(data)
        if regime == Regime.P3MOD4:
            value_h_sc = h_sc(data)
        elif regime == Regime.P3:
            # Every spinor genus over Q(sqrt 3) holds a single type
            value_h_sc = 1
        else:
            # One spinor genus: spinor classes and classes of norm-one ideals coincide
            value_h_sc = value_h1
        results[tag.value] = GenusResult(h1=value_h1, h_sc=value_h_sc, type_count=value_h_sc)
    return results

def _check_small_prime(p: int, field: FieldInvariants, per_genus: Dict[str, GenusResult]) -> None:
    zeta, h1_values = SMALL_PRIME_VALUES[p]
    got = {tag: g.h1 for tag, g in per_genus.items()}
    if field.zeta_minus_one != zeta or got != h1_values:
        raise ConsistencyError(
            f"p={p} disagrees with the tabulated values",
            {"zeta": field.zeta_minus_one, "expected_zeta": zeta, "h1": got, "expected_h1": h1_values},
        )

def report(p: int, checks: CheckSelection = CheckSelection.ALL) -> ClassNumberReport:
    """
    Full report for F = Q(sqrt p).

    Args:
        p: Prime below the configured ceiling
        checks: Which identity checks to attach

    Returns:
        ClassNumberReport; per_genus is keyed "principal" alone when there is a
        single spinor genus, "principal" and "nonprincipal" for p = 3 mod 4

    Raises:
        InvalidInputError: p not prime or above the ceiling
        IntegralityError: a class number came out non-integral
        ConsistencyError: an internal identity the report relies on failed
    """
    started = time.perf_counter()
    require_prime(p)
    settings = get_settings()
    if not settings.check_prime_bound(p):
        raise InvalidInputError(f"p = {p} exceeds the configured ceiling {settings.pmax_ceiling}")

    table = qsqrtp_b_tables(p)
    regime = table.regime
    order = maximal_order_profile_qsqrtp(p)
    field = order.field
    masses = mass_summary(order)
    genus_count = spinor_genus_group_order_qsqrtp(p)
    genus_tags = list(SpinorGenusTag)[:genus_count]
    per_genus = _genus_results(p, regime, genus_tags)

    if p in SMALL_PRIME_VALUES:
        _check_small_prime(p, field, per_genus)
    if regime == Regime.P3MOD4:
        total = type_number_total(p)
        split = sum(g.type_count for g in per_genus.values())
        if split != total:
            raise ConsistencyError(
                f"spinor type numbers {split} do not add up to |Tp| = {total} at p={p}",
                {tag: g.type_count for tag, g in per_genus.items()},
            )
    else:
        total = assert_integral(sum(g.type_count for g in per_genus.values()), f"|Tp| at p={p}")

    kron2p = kronecker(2, p) if p % 4 == 3 else None
    characters = {"q": kron2p, "sqrt_p": -1} if kron2p is not None else {}
    built = ClassNumberReport(
        p=p,
        regime=regime,
        field=field,
        fundamental_unit=fundamental_unit(p).describe(),
        auxiliary_class_numbers={s.value: v for s, v in auxiliary_class_numbers(p).items()},
        kron2p=kron2p,
        character_values=characters,
        masses=masses,
        spinor_genus_count=genus_count,
        per_genus=per_genus,
        type_number_total=total,
        noncyclic_types=noncyclic_type_genera(p) if p % 4 == 3 else None,
        b_tables=table,
    )
    results = run_report_identities(built, checks)
    built = built.model_copy(update={"identities_checked": results})

    log_report_summary(logger, p, regime.value, time.perf_counter() - started)
    failed = [r.name for r in results if not r.passed]
    if failed:
        log_with_extra(logger, "error", f"Identity checks failed for p={p}", p=p, failed=failed)
    return built
