"""Orbit classification and string functions for untwisted affine type A."""

from ._pwlie import (
    dominant_representative,
    maximal_classes,
    multiplicity,
    orbit_sum,
    partition_numbers,
    permutation_weights,
    signature_index,
    string_functions,
)

__all__ = [
    "dominant_representative",
    "maximal_classes",
    "multiplicity",
    "orbit_sum",
    "partition_numbers",
    "permutation_weights",
    "signature_index",
    "string_functions",
]
