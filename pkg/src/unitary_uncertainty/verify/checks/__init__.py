from __future__ import annotations

from typing import Callable, Dict

from unitary_uncertainty.verify.base import PropertyCheck
from unitary_uncertainty.verify.checks.properties import (
    BasisIndependenceCheck,
    BoundValidityCheck,
    Bpuur2TruncationCheck,
    CovarianceSymmetryCheck,
    FullReportConsistencyCheck,
    GeneralProductEqualityCheck,
    GeneralSumEqualityCheck,
    HermitianProductEqualityCheck,
    HermitianSumEqualityCheck,
    HermitianTruncationCheck,
    HierarchyMonotonicityCheck,
    MsuurValidityCheck,
    PerpendicularTermsCheck,
    PhaseInvarianceCheck,
    SubsetOracleCheck,
    UnitaryProductEqualityCheck,
    UnitarySumEqualityCheck,
    VarianceCodePathsCheck,
)


def built_in_check_factories() -> Dict[str, Callable[[], PropertyCheck]]:
    """Return built-in check classes keyed by check name, in run order."""
    checks = [
        UnitarySumEqualityCheck,
        UnitaryProductEqualityCheck,
        GeneralSumEqualityCheck,
        GeneralProductEqualityCheck,
        HermitianSumEqualityCheck,
        HermitianProductEqualityCheck,
        HermitianTruncationCheck,
        BasisIndependenceCheck,
        PerpendicularTermsCheck,
        HierarchyMonotonicityCheck,
        SubsetOracleCheck,
        BoundValidityCheck,
        Bpuur2TruncationCheck,
        MsuurValidityCheck,
        CovarianceSymmetryCheck,
        PhaseInvarianceCheck,
        VarianceCodePathsCheck,
        FullReportConsistencyCheck,
    ]
    return {cls.name: cls for cls in checks}
