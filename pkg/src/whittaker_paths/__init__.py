"""Whittaker vectors and functions as generating series of weighted lattice paths."""

from .cartan import CartanData, LieType, WeightParam, build_cartan, parse_type
from .errors import (
    CapExceeded,
    CriticalSingularity,
    DimensionMismatch,
    SingularSpecialization,
    SingularWeight,
    UnsupportedType,
    WhittakerError,
)
from .paths import Path, PartitionTable, enumerate_paths, partition_bruteforce, path_weight, vertex_weight
from .affine import AffinePartitionTable, CriticalExpansion, critical_solve
from .quantum import QContext, QPartitionTable

__all__ = [
    "AffinePartitionTable",
    "CapExceeded",
    "CartanData",
    "CriticalExpansion",
    "CriticalSingularity",
    "DimensionMismatch",
    "LieType",
    "Path",
    "PartitionTable",
    "QContext",
    "QPartitionTable",
    "SingularSpecialization",
    "SingularWeight",
    "UnsupportedType",
    "WeightParam",
    "WhittakerError",
    "build_cartan",
    "critical_solve",
    "enumerate_paths",
    "parse_type",
    "partition_bruteforce",
    "path_weight",
    "vertex_weight",
]
