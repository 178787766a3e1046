# Selectivity package
from quatclass.selectivity.genus import (
    SpinorGenusTag, GenusDescriptor, CMExtension, gauss_genus_group_order,
    spinor_genus_group_order_qsqrtp, k_in_sigma_eichler, qsqrtp_genus, qsqrtp_cm_extension,
)
from quatclass.selectivity.characters import (
    genus_character_qsqrtp, dyadic_character, delta_shift, delta_qsqrtp,
    prime_character_qsqrtp, delta_from_conductor_k1,
)
from quatclass.selectivity.noncyclic import noncyclic_type_genera
