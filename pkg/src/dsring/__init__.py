"""Exact Schubert-class products on disjoint unions of Grassmannians.

The engine multiplies Schubert classes in three rings -- ordinary
homology, torus-equivariant homology over Z[t], and torus-equivariant
K-homology over Z[q, q^-1] -- by enumerating tilings of a staircase
region with edge-matched tiles.  Supporting combinatorics (bounded
juggling patterns, rank functions, slices) cross-validate the region
construction, and a classical Littlewood-Richardson oracle anchors the
degree-zero layer.
"""

from .coeffs import IntPoly, LaurentPoly, coef_substitute
from .partitions import (BoxedPartition, all_partitions_in_box, bits_of,
                         inversions, partition_of)

__all__ = [
    "IntPoly",
    "LaurentPoly",
    "coef_substitute",
    "BoxedPartition",
    "all_partitions_in_box",
    "bits_of",
    "inversions",
    "partition_of",
]
