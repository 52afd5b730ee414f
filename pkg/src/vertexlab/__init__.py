"""Exact computations for six- and twenty-vertex models with domain-wall boundaries."""

from .errors import VertexLabError
from .kernels import BACKEND
from .sixv import Weights6V, count_dwbc, enumerate_dwbc, partition_brute
from .twentyv import UNIT_COMPOSITE, Weights20V, count_dwbc_20v, partition_brute_20v
from .determinants import SpectralParams, difrancesco_partition, homogeneous_partition, ik_partition

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "SpectralParams",
    "UNIT_COMPOSITE",
    "VertexLabError",
    "Weights20V",
    "Weights6V",
    "count_dwbc",
    "count_dwbc_20v",
    "difrancesco_partition",
    "enumerate_dwbc",
    "homogeneous_partition",
    "ik_partition",
    "partition_brute",
    "partition_brute_20v",
]
