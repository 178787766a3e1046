"""
Assisted evaluation
Routes a validated AssistedConfig through the mass and class number formulas
"""

from typing import List, Optional

from pydantic import ValidationError

from quatclass.arith import ExactModel
from quatclass.assisted.config import AssistedConfig, Which, validation_to_config_error
from quatclass.cm.orders import ResolvedCMOrder
from quatclass.formulas import FormulaInput, h1, h_sc
from quatclass.mass import MassSummary, mass_summary, require_eichler_nonzero
from quatclass.utils.logger import log_with_extra, setup_logger

logger = setup_logger(__name__)

class AssistedReport(ExactModel):
    """Masses always; h1 and h_sc when requested"""

    which: Which
    target_genus_label: str
    masses: MassSummary
    h1: Optional[int] = None
    h_sc: Optional[int] = None
    b1_labels: List[str]
    b_labels: List[str]

def evaluate(config: AssistedConfig) -> AssistedReport:
    """
    Evaluate masses and the requested class numbers.

    B1 is the set of orders with |mu(B)| > 2 and B the set with w(B) > 1.

    Raises:
        UnsupportedCaseError: some e_p = 0
        ConfigValidationError: orders inconsistent with the formula input
        IntegralityError: a class number came out non-integral
    """
    profile = require_eichler_nonzero(config.order_profile())
    masses = mass_summary(profile)
    resolved: List[ResolvedCMOrder] = [
        b.resolve(config.target_genus_label, profile.locals) for b in config.cm_orders
    ]
    b1 = [b for b in resolved if b.mu_order is not None and b.mu_order > 2]
    b = [b for b in resolved if b.unit_index > 1]

    try:
        data = FormulaInput(
            order=profile,
            b1_list=b1 if config.which.wants_h1 else [],
            b_list=b if config.which.wants_h_sc else None,
            h_F=config.field.class_number,
            h_plus=config.field.narrow_class_number,
        )
    except ValidationError as e:
        raise validation_to_config_error(e, prefix="cm_orders")

    result = AssistedReport(
        which=config.which,
        target_genus_label=config.target_genus_label,
        masses=masses,
        h1=h1(data) if config.which.wants_h1 else None,
        h_sc=h_sc(data) if config.which.wants_h_sc else None,
        b1_labels=[x.label for x in b1],
        b_labels=[x.label for x in b],
    )
    log_with_extra(logger, "info", "Assisted evaluation completed",
                   which=config.which.value, h1=result.h1, h_sc=result.h_sc,
                   genus=config.target_genus_label, component="assisted")
    return result
