"""Obstruction theory for split supermanifolds over compact Riemann surfaces."""

__version__ = "0.1.0"

from .bundles import (
    P1,
    Curve,
    LineBundleClass,
    Model,
    SplitBundle,
    Triviality,
    canonical_bundle,
    direct_sum,
    dual,
    exterior_power,
    tangent_bundle,
    tensor,
)
from .cech import CechClass, WindowError, cech_dims, convention_fingerprint, reduce_class
from .cohomology import CohomologyDims, bundle_cohomology, line_cohomology, serre_dual
from .laurent import LaurentPoly
from .obstruction import (
    GoodnessVerdict,
    Rule,
    Status,
    classify,
    obstruction_report,
    obstruction_sheaf,
    sufficient_vanishing_range,
)

__all__ = [
    "P1", "Curve", "LineBundleClass", "Model", "SplitBundle", "Triviality",
    "canonical_bundle", "direct_sum", "dual", "exterior_power", "tangent_bundle", "tensor",
    "CechClass", "WindowError", "cech_dims", "convention_fingerprint", "reduce_class",
    "CohomologyDims", "bundle_cohomology", "line_cohomology", "serre_dual",
    "LaurentPoly",
    "GoodnessVerdict", "Rule", "Status", "classify", "obstruction_report",
    "obstruction_sheaf", "sufficient_vanishing_range",
]
