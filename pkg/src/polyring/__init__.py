"""Exact maximal-matching counts for polygon chains and polygon rings.

The count of a ring is the trace of an ordered product of 9x9 transition
matrices, one per face; chains are a row vector folded through the same
matrices.  An enumeration oracle checks both.
"""
from .notation import ChainSpec, FaceSpec, RingSpec, format_spec, parse_chain, parse_ring
from .oracle import count_maximal, mm_vector
from .transfer import chain_vector, count_chain, count_ring
from .matgen import transition_matrix

__all__ = [
    "ChainSpec", "FaceSpec", "RingSpec", "format_spec", "parse_chain", "parse_ring",
    "count_maximal", "mm_vector", "count_chain", "count_ring", "chain_vector",
    "transition_matrix",
]
__version__ = "0.1.0"
