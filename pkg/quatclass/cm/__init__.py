# CM orders package
from quatclass.cm.orders import (
    ClassSymbol, ClassRatio, CMLocalData, CMOrderEntry, ResolvedCMOrder,
    eichler_symbol, m_p, big_M, resolved_big_M,
)
from quatclass.cm.tables import (
    DYADIC, RAMIFIED, Regime, QSqrtPBTable, regime_of, qsqrtp_b_tables,
)
