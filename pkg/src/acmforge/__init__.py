"""Homogeneous ACM bundles on exceptional Grassmannians, with exact arithmetic."""

__version__ = "0.1.0"

from .lie import (  # noqa: E402
    FAMILIES,
    LieError,
    Root,
    RootSystem,
    build_root_system,
    dim_X,
    levi_subsystem,
    pairing,
    support_roots,
)
from .acm import (  # noqa: E402
    AcmVerdict,
    AssociatedDatum,
    BudgetExceededError,
    ClassificationTable,
    InvalidWeightError,
    associated_datum,
    enumerate_acm,
    is_acm,
    normalize_initialized,
)
from .bbw import (  # noqa: E402
    Regular,
    Singular,
    acm_cross_check,
    canonical_twist,
    classify_weight,
    cohomology,
    dominant_conjugate,
    weyl_dimension,
)
from .levi import klimyk_tensor, levi_weights  # noqa: E402
from .wildness import table1_pair, verify_acm_pair, verify_prop44  # noqa: E402

__all__ = [
    "__version__",
    "#",
    "noqa:",
    "E402",
    "FAMILIES",
    "LieError",
    "Root",
    "RootSystem",
    "build_root_system",
    "dim_X",
    "levi_subsystem",
    "pairing",
    "support_roots",
    "#",
    "noqa:",
    "E402",
    "AcmVerdict",
    "AssociatedDatum",
    "BudgetExceededError",
    "ClassificationTable",
    "InvalidWeightError",
    "associated_datum",
    "enumerate_acm",
    "is_acm",
    "normalize_initialized",
    "#",
    "noqa:",
    "E402",
    "Regular",
    "Singular",
    "acm_cross_check",
    "canonical_twist",
    "classify_weight",
    "cohomology",
    "dominant_conjugate",
    "weyl_dimension",
    "klimyk_tensor",
    "levi_weights",
    "table1_pair",
    "verify_acm_pair",
    "verify_prop44",
]
