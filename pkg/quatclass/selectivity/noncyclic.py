"""
Spinor genera of the maximal orders with non-cyclic reduced unit group
For p = 3 mod 4: O8 (dihedral of order 8), O24 (S4) and, for p >= 7, O6
(dihedral of order 6)
"""

from typing import Dict

from quatclass.arith import kronecker, require_prime
from quatclass.errors import InvalidInputError
from quatclass.selectivity.characters import dyadic_character
from quatclass.selectivity.genus import SpinorGenusTag

def noncyclic_type_genera(p: int) -> Dict[str, SpinorGenusTag]:
    """
    Spinor genus of each non-cyclic type.

    O8 is principal. O8 and O24 meet in an Eichler order of level q, so O24 is
    O8's genus shifted by (2|p). For p = 1 mod 3, O6 and O24 meet in an Eichler
    order of level p3 | 3 with chi = (-p|3) = -1; for p = 11 mod 12, O6 is
    principal.
    """
    require_prime(p)
    if p % 4 != 3:
        raise InvalidInputError(f"non-cyclic types are split by spinor genus only for p = 3 mod 4, got p = {p}")
    o8 = SpinorGenusTag.PRINCIPAL
    o24 = o8.shifted(dyadic_character(p))
    genera = {"O8": o8, "O24": o24}
    if p == 3:
        return genera
    if p % 3 == 1:
        genera["O6"] = o24.shifted(kronecker(-p, 3))
    else:
        genera["O6"] = SpinorGenusTag.PRINCIPAL
    return genera
