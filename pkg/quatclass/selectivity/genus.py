"""
Genera and spinor genus fields
Descriptors for an order genus and a CM extension K/F, the spinor genus group
order, and the membership test K in Sigma_G for Eichler genera
"""

from enum import Enum
from typing import Dict, List

from pydantic import Field, model_validator

from quatclass.arith import ExactInt, ExactModel, factorize, require_prime
from quatclass.cm.tables import DYADIC
from quatclass.errors import InvalidInputError, UnsupportedCaseError
from quatclass.invariants.fields import field_discriminant

class SpinorGenusTag(str, Enum):
    """Spinor genus of a maximal order over Q(sqrt p)"""
    PRINCIPAL = "principal"
    NONPRINCIPAL = "nonprincipal"

    @property
    def is_principal(self) -> bool:
        return self is SpinorGenusTag.PRINCIPAL

    def shifted(self, character_value: int) -> "SpinorGenusTag":
        """The spinor genus reached across an ideal with genus character value +-1"""
        if character_value == 1:
            return self
        return SpinorGenusTag.NONPRINCIPAL if self.is_principal else SpinorGenusTag.PRINCIPAL

class GenusDescriptor(ExactModel):
    """Ram(D), the level n and the Eichler invariants of a genus of orders"""

    ramified_infinite_count: ExactInt = Field(ge=0)
    ramified_finite: List[str] = Field(default_factory=list)
    level_valuations: Dict[str, ExactInt] = Field(default_factory=dict)
    eichler_invariants: Dict[str, ExactInt] = Field(default_factory=dict)
    ramification_complete: bool = True

    @model_validator(mode="after")
    def _check_genus(self) -> "GenusDescriptor":
        if len(set(self.ramified_finite)) != len(self.ramified_finite):
            raise ValueError("ramified_finite lists a prime twice")
        total = self.ramified_infinite_count + len(self.ramified_finite)
        if self.ramification_complete and total % 2:
            raise ValueError(f"Ram(D) must have even cardinality, got {total}")
        level_support = {pid for pid, v in self.level_valuations.items() if v > 0}
        shared = level_support & set(self.ramified_finite)
        if shared:
            raise ValueError(f"level is not coprime to d(D) at {sorted(shared)}")
        if any(v < 0 for v in self.level_valuations.values()):
            raise ValueError("level valuations must be nonnegative")
        if any(e not in (-1, 0, 1, 2) for e in self.eichler_invariants.values()):
            raise ValueError("Eichler invariants lie in {-1, 0, 1, 2}")
        return self

class CMExtension(ExactModel):
    """A CM extension K/F: where it ramifies and how the relevant primes split"""

    label: str = Field(min_length=1)
    ramified_infinite_count: ExactInt = Field(ge=0)
    ramified_finite: List[str] = Field(default_factory=list)
    splitting: Dict[str, ExactInt] = Field(default_factory=dict)

def gauss_genus_group_order(t: int) -> int:
    """2^(t-1) for t >= 1 primes dividing the discriminant"""
    if t < 1:
        raise InvalidInputError(f"t = {t} must be at least 1")
    return 2 ** (t - 1)

def spinor_genus_group_order_qsqrtp(p: int) -> int:
    """
    Number of spinor genera of maximal orders in D over Q(sqrt p).
    h(Q(sqrt p)) is odd, so this is the Gauss genus group order: 2 iff p = 3 mod 4.
    """
    require_prime(p)
    return gauss_genus_group_order(len(factorize(field_discriminant(p))))

def k_in_sigma_eichler(genus: GenusDescriptor, extension: CMExtension) -> bool:
    """
    Whether K lies in the spinor genus field of an Eichler genus: K/F and D are
    unramified at every finite prime with the same infinite ramification, and
    every prime with odd level valuation splits in K.

    Raises:
        UnsupportedCaseError: some e_p(O) = 0
        InvalidInputError: missing splitting data at an odd-level prime
    """
    zero = sorted(pid for pid, e in genus.eichler_invariants.items() if e == 0)
    if zero:
        raise UnsupportedCaseError(UnsupportedCaseError.POLICY, {"primes": ", ".join(zero)})
    if genus.ramified_finite or extension.ramified_finite:
        return False
    if genus.ramified_infinite_count != extension.ramified_infinite_count:
        return False
    for pid, valuation in genus.level_valuations.items():
        if valuation % 2 == 0:
            continue
        if pid not in extension.splitting:
            raise InvalidInputError(f"{extension.label}: no splitting data at level prime '{pid}'")
        if extension.splitting[pid] != 1:
            return False
    return True

def qsqrtp_genus(p: int) -> GenusDescriptor:
    """Genus of maximal orders in D over Q(sqrt p): both infinite places ramified, level 1"""
    require_prime(p)
    return GenusDescriptor(ramified_infinite_count=2)

def qsqrtp_cm_extension(p: int, name: str) -> CMExtension:
    """
    K1 = F(sqrt -1), K2 = F(sqrt -2) or K3 = F(sqrt -3) over F = Q(sqrt p),
    with their finite ramification.
    """
    require_prime(p)
    if name == "K1":
        ramified = [] if p % 4 == 3 else [DYADIC]
    elif name == "K2":
        ramified = [DYADIC]
    elif name == "K3":
        # F(sqrt -3) = F(sqrt -1) when p = 3
        ramified = [] if p == 3 else ["3.1"]
    else:
        raise InvalidInputError(f"unknown CM extension '{name}', expected K1, K2 or K3")
    return CMExtension(label=name, ramified_infinite_count=2, ramified_finite=ramified)
