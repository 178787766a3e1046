# Mass formulas package
from quatclass.mass.profile import LocalShape, OrderLocalProfile, OrderProfile
from quatclass.mass.formulas import (
    mass1, mass_total, mass_sc, scl_size, u_of_order_qsqrtp, maximal_order_profile_qsqrtp,
    require_eichler_nonzero,
    MassSummary, mass_summary,
)
