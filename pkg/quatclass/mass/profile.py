"""
Order profiles
Per-prime local data of a quaternion order and the global profile the
mass formulas are evaluated on
"""

from enum import Enum
from fractions import Fraction
from typing import List

from pydantic import Field, model_validator

from quatclass.arith import ExactInt, ExactModel
from quatclass.invariants.fields import FieldInvariants

class LocalShape(str, Enum):
    """Which case of the local embedding formula a prime falls under"""
    RAMIFIED_MAXIMAL = "ramified_maximal"    # p | d(D), O_p maximal
    EICHLER_SQUAREFREE = "eichler_squarefree"  # p | n exactly once
    MATRIX = "matrix"                        # O_p = M_2(O_{F_p})
    OTHER = "other"                          # needs an explicit m_p value

class OrderLocalProfile(ExactModel):
    """Nm(p), Eichler invariant e_p and nu_p(d(O)) at one prime"""

    prime_id: str = Field(min_length=1)
    residue_norm: ExactInt = Field(ge=2)
    eichler_invariant: ExactInt = Field(ge=-1, le=2)
    discriminant_valuation: ExactInt = Field(ge=0)

    @model_validator(mode="after")
    def _matrix_iff_unramified(self) -> "OrderLocalProfile":
        if (self.eichler_invariant == 2) != (self.discriminant_valuation == 0):
            raise ValueError("e_p = 2 exactly when the discriminant valuation is 0")
        return self

    @property
    def shape(self) -> LocalShape:
        e, v = self.eichler_invariant, self.discriminant_valuation
        if e == 2:
            return LocalShape.MATRIX
        if e == -1 and v == 1:
            return LocalShape.RAMIFIED_MAXIMAL
        if e == 1 and v == 1:
            return LocalShape.EICHLER_SQUAREFREE
        return LocalShape.OTHER

    def local_factor(self) -> Fraction:
        """(1 - Nm(p)^-2) / (1 - e_p Nm(p)^-1)"""
        q = Fraction(1, self.residue_norm)
        return (1 - q * q) / (1 - self.eichler_invariant * q)

    def norm_contribution(self) -> int:
        """Nm(p)^nu_p(d(O)), this prime's share of Nm(d(O))"""
        return self.residue_norm ** self.discriminant_valuation

class OrderProfile(ExactModel):
    """
    Global data of an O_F-order O: field invariants, the primes dividing d(O),
    [O_F^ : Nr(O^x)] and u(O).
    """

    field: FieldInvariants
    locals: List[OrderLocalProfile] = Field(default_factory=list)
    norm_unit_index: ExactInt = Field(default=1, ge=1)
    u_value: ExactInt = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _check_profile(self) -> "OrderProfile":
        ids = [local.prime_id for local in self.locals]
        if len(ids) != len(set(ids)):
            raise ValueError("prime ids in locals must be distinct")
        if any(local.discriminant_valuation == 0 for local in self.locals):
            raise ValueError("locals must cover exactly the primes dividing d(O)")
        if self.all_eichler_nonzero() and self.norm_unit_index != 1:
            raise ValueError("norm_unit_index must be 1 when every e_p is nonzero")
        return self

    def all_eichler_nonzero(self) -> bool:
        return all(local.eichler_invariant != 0 for local in self.locals)

    def discriminant_norm(self) -> int:
        """Nm(d(O))"""
        result = 1
        for local in self.locals:
            result *= local.norm_contribution()
        return result

    def local_product(self) -> Fraction:
        result = Fraction(1)
        for local in self.locals:
            result *= local.local_factor()
        return result

    def local(self, prime_id: str) -> OrderLocalProfile:
        for local in self.locals:
            if local.prime_id == prime_id:
                return local
        raise KeyError(prime_id)
