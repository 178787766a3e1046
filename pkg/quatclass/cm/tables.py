"""
B-tables for F = Q(sqrt p), D ramified exactly at the two infinite places
The CM O_F-orders with w(B) > 1 (the B table) and those with |mu(B)| > 2 (the
B1 table) for each regime, with h(B)/h(F) kept symbolic as printed.
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import model_validator

from quatclass.arith import ExactModel, kronecker, require_prime
from quatclass.cm.orders import CMOrderEntry, ClassRatio, ClassSymbol
from quatclass.errors import InvalidInputError

# Prime ids of Q(sqrt p)
DYADIC = "q"
RAMIFIED = "sqrt_p"

# Labels
O_F_SQRT_MINUS_1 = "O_F[sqrt(-1)]"
B_1_2 = "B_{1,2}"
B_1_3 = "B_{1,3}"
O_K1 = "O_K1"
O_K2 = "O_K2"
O_K3 = "O_K3"
Z_SQRT2_SQRT_MINUS_1 = "Z[sqrt(2),sqrt(-1)]"
Z_ZETA_10 = "Z[zeta_10]"

class Regime(str, Enum):
    """Case split of the Q(sqrt p) family"""
    P2 = "p=2"
    P3 = "p=3"
    P5 = "p=5"
    P1MOD4 = "p=1 mod 4, p>=13"
    P3MOD4 = "p=3 mod 4, p>=7"

def regime_of(p: int) -> Regime:
    """Regime of a prime p by exact congruence and size"""
    require_prime(p)
    special = {2: Regime.P2, 3: Regime.P3, 5: Regime.P5}
    if p in special:
        return special[p]
    return Regime.P1MOD4 if p % 4 == 1 else Regime.P3MOD4

class QSqrtPBTable(ExactModel):
    """
    The B1 rows (|mu(B)| > 2) and, where the regime needs it, the B rows
    (w(B) > 1). b_entries is None when h_sc is not computed from a B sum.
    """

    p: int
    regime: Regime
    b1_entries: List[CMOrderEntry]
    b_entries: Optional[List[CMOrderEntry]] = None

    @model_validator(mode="after")
    def _b1_inside_b(self) -> "QSqrtPBTable":
        if self.b_entries is not None:
            missing = {e.label for e in self.b1_entries} - {e.label for e in self.b_entries}
            if missing:
                raise ValueError(f"B1 rows missing from B: {sorted(missing)}")
        return self

    def entry(self, label: str) -> CMOrderEntry:
        for rows in (self.b_entries or [], self.b1_entries):
            for row in rows:
                if row.label == label:
                    return row
        raise InvalidInputError(f"no order labelled '{label}' in the {self.regime.value} table")

    def labels(self) -> List[str]:
        rows = self.b_entries if self.b_entries is not None else self.b1_entries
        return [row.label for row in rows]

def _ratio(symbol: ClassSymbol, constant=1, kron2_coefficient=0) -> ClassRatio:
    return ClassRatio(symbol=symbol, constant=Fraction(constant),
                      kron2_coefficient=Fraction(kron2_coefficient))

ONE = _ratio(ClassSymbol.ONE)

def _row(label: str, mu: int, w: int, ratio: ClassRatio, selective: bool = False,
         delta: tuple = (1, 1), conductor: Optional[Dict[str, int]] = None,
         artin: Optional[Dict[str, int]] = None) -> CMOrderEntry:
    return CMOrderEntry(
        label=label,
        mu_order=mu,
        unit_index=w,
        class_ratio=ratio,
        conductor_valuations=conductor or {},
        artin_symbols=artin or {},
        in_spinor_genus_field=selective,
        delta_principal=delta[0],
        delta_nonprincipal=delta[1],
    )

def _p3mod4_rows(sigma: int) -> List[CMOrderEntry]:
    # K1 = F(sqrt -1) is the spinor genus field; q splits in K1 iff (2|p) = 1 and
    # sqrt(p) O_F, the nontrivial spinor genus class, stays inert
    k1_artin = {DYADIC: sigma, RAMIFIED: -1}
    twice_h = _ratio(ClassSymbol.H_MINUS_P, 2, -1)
    return [
        _row(O_F_SQRT_MINUS_1, 4, 2, twice_h, True, (1, 0), {DYADIC: 2}, k1_artin),
        _row(B_1_2, 4, 4, twice_h, True, ((1 + sigma) // 2, (1 - sigma) // 2), {DYADIC: 1}, k1_artin),
        _row(O_K1, 4, 4, _ratio(ClassSymbol.H_MINUS_P), True, (1, 0), None, k1_artin),
        _row(O_K3, 6, 3, _ratio(ClassSymbol.H_MINUS_3P, Fraction(1, 2))),
    ]

def qsqrtp_b_tables(p: int) -> QSqrtPBTable:
    """
    Regime-correct B-tables for Q(sqrt p).

    Args:
        p: Prime

    Returns:
        QSqrtPBTable; for p = 1 mod 4 and p in {2, 3, 5} only B1 is listed, since
        h_sc there is not assembled from a B sum
    """
    regime = regime_of(p)
    if regime == Regime.P2:
        b1 = [
            _row(O_K1, 8, 4, ONE),
            _row(Z_SQRT2_SQRT_MINUS_1, 4, 2, ONE),
            _row(O_K3, 6, 3, ONE),
        ]
        return QSqrtPBTable(p=p, regime=regime, b1_entries=b1)
    if regime == Regime.P5:
        b1 = [
            _row(O_K1, 4, 2, ONE),
            _row(O_K3, 6, 3, ONE),
            _row(Z_ZETA_10, 10, 5, ONE),
        ]
        return QSqrtPBTable(p=p, regime=regime, b1_entries=b1)
    if regime == Regime.P3:
        # (2|3) = -1; B_{1,3} has conductor sqrt(3) O_F
        k1_artin = {DYADIC: -1, RAMIFIED: -1}
        b1 = [
            _row(O_F_SQRT_MINUS_1, 4, 2, ONE, True, (1, 0), {DYADIC: 2}, k1_artin),
            _row(B_1_2, 4, 4, ONE, True, (0, 1), {DYADIC: 1}, k1_artin),
            _row(B_1_3, 6, 3, ONE, True, (0, 1), {RAMIFIED: 1}, k1_artin),
            _row(O_K1, 12, 12, ONE, True, (1, 0), None, k1_artin),
        ]
        return QSqrtPBTable(p=p, regime=regime, b1_entries=b1)
    if regime == Regime.P1MOD4:
        b1 = [
            _row(O_K1, 4, 2, _ratio(ClassSymbol.H_MINUS_P, Fraction(1, 2))),
            _row(O_K3, 6, 3, _ratio(ClassSymbol.H_MINUS_3P, Fraction(1, 2))),
        ]
        return QSqrtPBTable(p=p, regime=regime, b1_entries=b1)

    sigma = kronecker(2, p)
    b1 = _p3mod4_rows(sigma)
    b = b1 + [_row(O_K2, 2, 2, _ratio(ClassSymbol.H_MINUS_2P))]
    return QSqrtPBTable(p=p, regime=regime, b1_entries=b1, b_entries=b)
