"""Co-occurrence count matrices for all column pairs of a binary dataset.

For columns i, j the four cell counts are

    g11[i][j]  rows with column i = 1 and column j = 1
    g00[i][j]  rows with column i = 0 and column j = 0
    g01[i][j]  rows with column i = 0 and column j = 1
    g10        the transpose of g01 (never stored)

The optimized path computes only g11 (one bit-packed product) and derives
the rest in closed form from the row count n and the column sums v:

    g00[i][j] = n - v[i] - v[j] + g11[i][j]
    g01[i][j] = v[j] - g11[i][j]

The direct path counts every cell with its own popcount stream; it exists
to verify those identities and as the unoptimized benchmark baseline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .binmat import BinaryMatrix, SparseBinaryMatrix, _pad_mask, column_sums
from .errors import ConsistencyError, DimensionError


@dataclass(frozen=True, eq=False)
class GramSet:
    """Complete co-occurrence counts for one dataset.

    n is the row count; v the per-column ones count (uint64, length m);
    g11/g00/g01 are m x m int64 count matrices.  g10 is g01.T by definition.
    """

    n: int
    v: np.ndarray
    g11: np.ndarray
    g00: np.ndarray
    g01: np.ndarray

    def __post_init__(self):
        m = self.v.shape[0]
        for name in ("g11", "g00", "g01"):
            mat = getattr(self, name)
            if mat.shape != (m, m):
                raise DimensionError(f"{name} must be {m}x{m}, got {mat.shape}")

    @property
    def g10(self) -> np.ndarray:
        return self.g01.T


def gram_ones(matrix: BinaryMatrix) -> np.ndarray:
    """Count co-occurring ones for every column pair (the bit-packed product).

    Returns a symmetric m x m int64 matrix whose diagonal is the column sums.
    """
    from . import _kernels  # deferred: numba import is slow

    out = np.zeros((matrix.n_cols, matrix.n_cols), dtype=np.int64)
    _kernels.gram_ones_kernel(matrix.words, out)
    return out


def gram_ones_sparse(sparse: SparseBinaryMatrix) -> np.ndarray:
    """Same result as :func:`gram_ones` via sparse index accumulation.

    Uses a CSC product over the stored row indices; the complement matrix is
    never formed, so cost scales with the number of ones.
    """
    from scipy import sparse as sp

    lengths = np.array([idx.size for idx in sparse.col_indices], dtype=np.int64)
    indptr = np.concatenate(([0], np.cumsum(lengths)))
    if indptr[-1] == 0:
        return np.zeros((sparse.n_cols, sparse.n_cols), dtype=np.int64)
    indices = np.concatenate([idx for idx in sparse.col_indices if idx.size])
    data = np.ones(indices.shape[0], dtype=np.int64)
    mat = sp.csc_matrix(
        (data, indices, indptr), shape=(sparse.n_rows, sparse.n_cols)
    )
    return np.asarray((mat.T @ mat).toarray(), dtype=np.int64)


def gram_complete_optimized(g11: np.ndarray, v: np.ndarray, n: int) -> GramSet:
    """Derive g00 and g01 from g11 in closed form; no further matrix product.

    Raises ConsistencyError if the inputs disagree (asymmetric g11, diagonal
    not matching v) or any derived count falls outside [0, n].
    """
    g11 = np.asarray(g11, dtype=np.int64)
    v = np.asarray(v, dtype=np.uint64)
    if g11.shape != (v.shape[0], v.shape[0]):
        raise DimensionError(f"g11 shape {g11.shape} does not match {v.shape[0]} columns")
    if not np.array_equal(g11, g11.T):
        raise ConsistencyError("g11 must be symmetric")
    vi = v.astype(np.int64)
    if not np.array_equal(np.diagonal(g11), vi):
        raise ConsistencyError("diagonal of g11 must equal the column sums")
    if np.any(vi > n) or np.any(vi < 0):
        raise ConsistencyError(f"column sums must lie in [0, {n}]")

    g00 = (n + g11) - vi[:, None] - vi[None, :]
    g01 = vi[None, :] - g11
    for name, mat in (("g11", g11), ("g00", g00), ("g01", g01)):
        if mat.min(initial=0) < 0 or mat.max(initial=0) > n:
            raise ConsistencyError(f"{name} entry outside [0, {n}]; inputs corrupted")
    return GramSet(n=n, v=v, g11=g11, g00=g00, g01=g01)


def gram_complete_direct(matrix: BinaryMatrix) -> GramSet:
    """Count every cell with independent popcount kernels, no identities.

    One full pass over the packed words per count matrix: (col, col) for g11,
    (~col, ~col) for g00, (~col, col) for g01, with padding masked after each
    negation.  This is the unoptimized baseline the closed-form path is
    verified against and benchmarked against.
    """
    from . import _kernels

    m = matrix.n_cols
    pad = _pad_mask(matrix.n_rows)
    g11 = np.zeros((m, m), dtype=np.int64)
    g00 = np.zeros((m, m), dtype=np.int64)
    g01 = np.zeros((m, m), dtype=np.int64)
    _kernels.gram_ones_kernel(matrix.words, g11)
    _kernels.gram_zeros_kernel(matrix.words, pad, g00)
    _kernels.gram_mixed_kernel(matrix.words, pad, g01)
    v = np.diagonal(g11).astype(np.uint64)
    return GramSet(n=matrix.n_rows, v=v, g11=g11, g00=g00, g01=g01)


def gram_from_dense(matrix: BinaryMatrix) -> GramSet:
    """Optimized pipeline for the packed representation."""
    return gram_complete_optimized(gram_ones(matrix), column_sums(matrix), matrix.n_rows)


def gram_from_sparse(sparse: SparseBinaryMatrix) -> GramSet:
    """Optimized pipeline for the index-list representation."""
    g11 = gram_ones_sparse(sparse)
    v = np.array([idx.size for idx in sparse.col_indices], dtype=np.uint64)
    return gram_complete_optimized(g11, v, sparse.n_rows)
