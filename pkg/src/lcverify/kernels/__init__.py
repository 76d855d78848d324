"""Integer hot loops: BFS distances, distance-regularity counts, code enumeration.

Two interchangeable implementations live side by side: ``_numba`` (``@njit``)
and ``_numpy`` (vectorised, no compilation). The numba path is used when numba
imports and ``LCVERIFY_PURE_NUMPY`` is unset or ``0``. Both return identical
integer arrays, so the choice never changes a result.
"""
import os

from . import _numpy as numpy_impl

BACKEND_ENV = "LCVERIFY_PURE_NUMPY"


def _want_numba() -> bool:
    flag = os.environ.get(BACKEND_ENV, "").strip().lower()
    return flag in ("", "0", "false", "no")


try:
    if not _want_numba():
        raise ImportError("disabled by " + BACKEND_ENV)
    from . import _numba as numba_impl
    impl = numba_impl
    BACKEND = "numba"
except ImportError:
    numba_impl = None
    impl = numpy_impl
    BACKEND = "numpy"

bfs_distances = impl.bfs_distances
all_pairs_distances = impl.all_pairs_distances
intersection_counts = impl.intersection_counts
span_weight_histogram = impl.span_weight_histogram
coset_tables = impl.coset_tables

__all__ = [
    "BACKEND",
    "BACKEND_ENV",
    "numpy_impl",
    "numba_impl",
    "bfs_distances",
    "all_pairs_distances",
    "intersection_counts",
    "span_weight_histogram",
    "coset_tables",
]
