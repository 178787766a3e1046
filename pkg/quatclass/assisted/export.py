"""
Export of Q(sqrt p) pipeline inputs as assisted configs
"""

from quatclass.arith import require_prime
from quatclass.assisted.config import AssistedCMOrder, AssistedConfig, AssistedOrder, Which
from quatclass.cm.tables import Regime, regime_of
from quatclass.errors import InvalidInputError
from quatclass.pipeline.report import formula_input_qsqrtp
from quatclass.selectivity import SpinorGenusTag, spinor_genus_group_order_qsqrtp

def export_qsqrtp_config(p: int, genus: SpinorGenusTag = SpinorGenusTag.PRINCIPAL) -> AssistedConfig:
    """
    The assisted config equivalent to the pipeline's input for a maximal order
    over Q(sqrt p) in the given spinor genus. h_sc is requested only where the
    pipeline assembles it from a B sum (p = 3 mod 4, p >= 7).

    Raises:
        InvalidInputError: p not prime, or a nonprincipal genus for p != 3 mod 4
    """
    require_prime(p)
    genus = SpinorGenusTag(genus)
    if not genus.is_principal and spinor_genus_group_order_qsqrtp(p) == 1:
        raise InvalidInputError(f"p = {p} has a single spinor genus; use 'principal'")

    data = formula_input_qsqrtp(p, genus)
    rows = data.b_list if data.b_list is not None else data.b1_list
    cm_orders = [
        AssistedCMOrder(
            label=row.label,
            mu_order=row.mu_order,
            unit_index=row.unit_index,
            class_number=row.class_number,
            m_product=row.m_product,
            selective=row.selective,
            deltas={genus.value: row.delta},
        )
        for row in rows
    ]
    which = Which.BOTH if regime_of(p) == Regime.P3MOD4 else Which.H1
    return AssistedConfig(
        field=data.order.field,
        order=AssistedOrder(
            locals=data.order.locals,
            norm_unit_index=data.order.norm_unit_index,
            u_value=data.order.u_value,
        ),
        cm_orders=cm_orders,
        which=which,
        target_genus_label=genus.value,
    )
