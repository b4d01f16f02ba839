"""Exact Burau computation and right-veering classification for 3-braids."""

from __future__ import annotations

from .braid import BraidWord, delta2k, parse
from .burau import BurauMatrix, IntMatrix2, burau_reduced, burau_unreduced, psi
from .classify import (
    ReducibleAnalysis,
    Side,
    ThurstonType,
    analyze_reducible,
    periodic_k,
    periodic_veering,
    reducible_veering,
    reducible_verdict,
    thurston_type,
)
from .errors import (
    BoundaryClass,
    InternalInconsistency,
    ParseError,
    ReconstructionMismatch,
    TriangleViolation,
    VeerError,
)
from .freegroup import (
    GENERATORS,
    FreeWord,
    artin_apply,
    delta2_conjugate,
    fox_column,
)
from .intersect import (
    IntersectionRow,
    IntersectionTable,
    intersection_table,
    row_from_column,
    table_from_matrix,
)
from .laurent import LaurentPoly, lp
from .reconstruct import (
    GeneralVerdict,
    GeneratorReconstruction,
    TrainTrackConfig,
    general_veering,
    reconstruct_generator,
    train_track_config,
)
from .sidedness import Sidedness, compare
from .winding import fdtc

__version__ = "0.1.0"

__all__ = [
    "BoundaryClass",
    "BraidWord",
    "BurauMatrix",
    "FreeWord",
    "GENERATORS",
    "GeneralVerdict",
    "GeneratorReconstruction",
    "IntMatrix2",
    "InternalInconsistency",
    "IntersectionRow",
    "IntersectionTable",
    "LaurentPoly",
    "ParseError",
    "ReconstructionMismatch",
    "ReducibleAnalysis",
    "Side",
    "Sidedness",
    "ThurstonType",
    "TrainTrackConfig",
    "TriangleViolation",
    "VeerError",
    "analyze_reducible",
    "artin_apply",
    "burau_reduced",
    "burau_unreduced",
    "compare",
    "delta2_conjugate",
    "delta2k",
    "fdtc",
    "fox_column",
    "general_veering",
    "intersection_table",
    "lp",
    "parse",
    "periodic_k",
    "periodic_veering",
    "psi",
    "reconstruct_generator",
    "reducible_veering",
    "reducible_verdict",
    "row_from_column",
    "table_from_matrix",
    "thurston_type",
    "train_track_config",
    "__version__",
]
