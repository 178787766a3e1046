"""
Genus character and Delta(B, O)
chi([a]+) = (-p | Nm(a)) on the narrow class group of Q(sqrt p), p = 3 mod 4,
the shift rule for Delta across an ideal, and the Delta columns of the tables
"""

from math import gcd
from typing import Dict

from quatclass.arith import kronecker, require_prime
from quatclass.cm.tables import DYADIC, O_K1, RAMIFIED, qsqrtp_b_tables
from quatclass.errors import InvalidInputError
from quatclass.selectivity.genus import SpinorGenusTag

def genus_character_qsqrtp(p: int, ideal_norm: int) -> int:
    """
    Genus character of Q(sqrt p) on an ideal of norm ideal_norm.

    Raises:
        InvalidInputError: p != 3 mod 4, or the norm is not coprime to p
    """
    require_prime(p)
    if p % 4 != 3:
        raise InvalidInputError(f"the genus character is defined for p = 3 mod 4, got p = {p}")
    if ideal_norm < 1 or gcd(ideal_norm, p) != 1:
        raise InvalidInputError(f"ideal norm {ideal_norm} must be positive and coprime to p = {p}")
    return kronecker(-p, ideal_norm)

def dyadic_character(p: int) -> int:
    """chi([q]+) for the dyadic prime q, equal to (2|p)"""
    return genus_character_qsqrtp(p, 2)

def delta_shift(delta_base: int, character_value: int) -> int:
    """Delta after moving across an ideal: flipped iff the character value is -1"""
    if delta_base not in (0, 1):
        raise InvalidInputError(f"delta must be 0 or 1, got {delta_base}")
    if character_value not in (1, -1):
        raise InvalidInputError(f"character value must be +-1, got {character_value}")
    return delta_base if character_value == 1 else 1 - delta_base

def delta_qsqrtp(p: int, label: str, genus_tag: SpinorGenusTag) -> int:
    """
    Delta(B, O) for the order labelled `label` and a maximal order O in the
    given spinor genus, read from the regime's B-tables.

    Raises:
        InvalidInputError: label not in the table of p's regime
    """
    genus_tag = SpinorGenusTag(genus_tag)
    return qsqrtp_b_tables(p).entry(label).delta(genus_tag.is_principal)

def prime_character_qsqrtp(p: int, prime_id: str) -> int:
    """chi on the dyadic prime (2|p) and on sqrt(p) O_F, the nontrivial genus class"""
    if prime_id == DYADIC:
        return dyadic_character(p)
    if prime_id == RAMIFIED:
        require_prime(p)
        return -1
    raise InvalidInputError(f"no genus character value for prime '{prime_id}'")

def delta_from_conductor_k1(p: int, conductor_valuations: Dict[str, int],
                            genus_tag: SpinorGenusTag) -> int:
    """
    Delta of an order in K1 = F(sqrt -1) with the given conductor, shifted from
    Delta(O_K1, O) by chi of the conductor. p = 3 mod 4.
    """
    genus_tag = SpinorGenusTag(genus_tag)
    delta = delta_qsqrtp(p, O_K1, genus_tag)
    for prime_id, valuation in sorted(conductor_valuations.items()):
        for _ in range(valuation):
            delta = delta_shift(delta, prime_character_qsqrtp(p, prime_id))
    return delta
