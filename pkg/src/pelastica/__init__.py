"""p-elliptic functions, the classification of planar p-elasticae and their closed-form traces."""

from ._errors import AmbiguityError, DomainError, FitError, PElasticaError, ToleranceError
from .classify import (
    Borderline,
    Circular,
    FlatCore,
    FlatCoreSpec,
    InitialData,
    Linear,
    Orbitlike,
    Potential,
    RegularityReport,
    Wavelike,
    canonical_class,
    classify,
    curvature_of,
    curvature_zeros,
    regularity,
)
from .curves import ClosedCurveReport, Trace, closure_check, figure_eight, qstar, trace_family
from .elliptic import IntegralKind, amplitude, complete, dn, integral, pparams, sech, sn_cn, tanh
from .verify import VerifyReport

__version__ = "0.1.0"

__all__ = [
    "AmbiguityError",
    "DomainError",
    "FitError",
    "PElasticaError",
    "ToleranceError",
    "Borderline",
    "Circular",
    "FlatCore",
    "FlatCoreSpec",
    "InitialData",
    "Linear",
    "Orbitlike",
    "Potential",
    "RegularityReport",
    "Wavelike",
    "canonical_class",
    "classify",
    "curvature_of",
    "curvature_zeros",
    "regularity",
    "ClosedCurveReport",
    "Trace",
    "closure_check",
    "figure_eight",
    "qstar",
    "trace_family",
    "IntegralKind",
    "amplitude",
    "complete",
    "dn",
    "integral",
    "pparams",
    "sech",
    "sn_cn",
    "tanh",
    "VerifyReport",
]
