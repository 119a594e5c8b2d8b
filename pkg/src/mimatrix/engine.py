"""Mutual information assembly: probabilities, entropies, all-pairs matrices.

Every MI value is the four-cell sum

    MI(X, Y) = sum over (x, y) in {0,1}^2 of  P(x,y) * log2(P(x,y) / (P(x)P(y)))

in bits.  Two evaluation conventions are supported.  Exact mode applies the
limit convention 0 * log(0) = 0, which is the mathematical definition and the
default.  Epsilon mode evaluates each term as P * log2((P + eps) / (E + eps)),
a bounded stabilizer kept for parity with epsilon-regularized pipelines.

The four terms are always summed in the fixed order (1,1), (1,0), (0,1),
(0,0), and the result is mirrored from the upper triangle, so outputs are
bit-identical across backends and thread counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .binmat import BinaryMatrix, SparseBinaryMatrix, column_sums, to_dense, to_sparse
from .errors import DimensionError, DomainError
from .gram import GramSet, gram_complete_direct, gram_from_dense, gram_from_sparse

MODES = ("exact", "epsilon")
BACKENDS = ("dense", "sparse", "direct")


@dataclass(frozen=True)
class EngineConfig:
    """Evaluation options for MI assembly."""

    mode: str = "exact"
    epsilon: float = 1e-12
    include_diagonal: bool = True

    def __post_init__(self):
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.epsilon > 0:
            raise DomainError(f"epsilon must be positive, got {self.epsilon}")


@dataclass(frozen=True, eq=False)
class ProbabilitySet:
    """Joint and marginal probabilities for all column pairs.

    p11/p00/p01 are m x m float64 (p10 is p01.T); p1/p0 are the length-m
    marginals taken from the Gram diagonals.
    """

    p11: np.ndarray
    p00: np.ndarray
    p01: np.ndarray
    p1: np.ndarray
    p0: np.ndarray

    @property
    def p10(self) -> np.ndarray:
        return self.p01.T


@dataclass(frozen=True, eq=False)
class MIMatrix:
    """Symmetric m x m matrix of pairwise mutual information, in bits."""

    values: np.ndarray

    @property
    def n_cols(self) -> int:
        return self.values.shape[0]

    def checksum(self) -> float:
        """Sum of all entries; used for cross-backend consistency checks."""
        return float(self.values.sum())


def binary_entropy(p1: float) -> float:
    """Entropy in bits of a Bernoulli(p1) variable, with 0*log(0) = 0."""
    if not 0.0 <= p1 <= 1.0:
        raise DomainError(f"probability must lie in [0, 1], got {p1}")
    h = 0.0
    if p1 > 0.0:
        h -= p1 * math.log2(p1)
    if p1 < 1.0:
        h -= (1.0 - p1) * math.log2(1.0 - p1)
    return h


def probabilities(g: GramSet) -> ProbabilitySet:
    """Divide the count matrices by n; marginals come from the diagonals."""
    n = float(g.n)
    return ProbabilitySet(
        p11=g.g11 / n,
        p00=g.g00 / n,
        p01=g.g01 / n,
        p1=np.diagonal(g.g11) / n,
        p0=np.diagonal(g.g00) / n,
    )


def _term_exact(p: np.ndarray, e: np.ndarray) -> np.ndarray:
    # Whenever p > 0 the matching marginals are nonzero, so e > 0 there.
    with np.errstate(divide="ignore", invalid="ignore"):
        t = p * np.log2(p / e)
    return np.where(p > 0.0, t, 0.0)


def _term_epsilon(p: np.ndarray, e: np.ndarray, eps: float) -> np.ndarray:
    return p * np.log2((p + eps) / (e + eps))


def mi_from_probabilities(p: ProbabilitySet, cfg: EngineConfig | None = None) -> MIMatrix:
    """Assemble the MI matrix from a ProbabilitySet.

    Expected-independence matrices are formed on the fly as outer products of
    the marginals and never stored.
    """
    cfg = cfg or EngineConfig()
    p1, p0 = p.p1, p.p0
    cells = (
        (p.p11, np.outer(p1, p1)),
        (p.p10, np.outer(p1, p0)),
        (p.p01, np.outer(p0, p1)),
        (p.p00, np.outer(p0, p0)),
    )
    m = p1.shape[0]
    mi = np.zeros((m, m), dtype=np.float64)
    for joint, expected in cells:
        if cfg.mode == "exact":
            mi += _term_exact(joint, expected)
        else:
            mi += _term_epsilon(joint, expected, cfg.epsilon)
    # Mirror the upper triangle for exact symmetry.
    mi = np.triu(mi) + np.triu(mi, 1).T
    if not cfg.include_diagonal:
        np.fill_diagonal(mi, 0.0)
    return MIMatrix(values=mi)


def mi_all_pairs(
    data: BinaryMatrix | SparseBinaryMatrix,
    cfg: EngineConfig | None = None,
    backend: str = "dense",
    threads: int = 0,
) -> MIMatrix:
    """Full pairwise MI matrix via one of the bulk Gram backends.

    backend selects the counting path: "dense" (bit-packed, optimized),
    "sparse" (index lists, optimized) or "direct" (four-product, unoptimized).
    All backends agree entrywise to within 1e-12.  threads caps internal
    parallelism; 0 means automatic.  Results do not depend on thread count.
    """
    if backend not in BACKENDS:
        raise DomainError(f"backend must be one of {BACKENDS}, got {backend!r}")
    from ._kernels import thread_limit

    with thread_limit(threads):
        if backend == "sparse":
            sparse = data if isinstance(data, SparseBinaryMatrix) else to_sparse(data)
            g = gram_from_sparse(sparse)
        else:
            dense = data if isinstance(data, BinaryMatrix) else to_dense(data)
            g = gram_complete_direct(dense) if backend == "direct" else gram_from_dense(dense)
    return mi_from_probabilities(probabilities(g), cfg)


def _cell_counts(x: np.ndarray, y: np.ndarray) -> tuple[int, int, int, int]:
    """Count the four value combinations by direct comparison over rows."""
    xb = x.astype(bool)
    yb = y.astype(bool)
    c11 = int(np.count_nonzero(xb & yb))
    c10 = int(np.count_nonzero(xb & ~yb))
    c01 = int(np.count_nonzero(~xb & yb))
    c00 = int(np.count_nonzero(~xb & ~yb))
    return c11, c10, c01, c00


def _mi_from_counts(
    c11: int, c10: int, c01: int, c00: int, n: int, cfg: EngineConfig
) -> float:
    px1 = (c11 + c10) / n
    px0 = (c01 + c00) / n
    py1 = (c11 + c01) / n
    py0 = (c10 + c00) / n
    cells = (
        (c11 / n, px1 * py1),
        (c10 / n, px1 * py0),
        (c01 / n, px0 * py1),
        (c00 / n, px0 * py0),
    )
    total = 0.0
    for joint, expected in cells:
        if cfg.mode == "exact":
            if joint > 0.0:
                total += joint * math.log2(joint / expected)
        else:
            total += joint * math.log2((joint + cfg.epsilon) / (expected + cfg.epsilon))
    return total


def mi_pairwise_naive(x, y) -> float:
    """Reference MI of two binary vectors: count cells row by row, apply the
    four-term formula directly.  No Gram machinery; exact-mode convention."""
    x = np.asarray(x)
    y = np.asarray(y)
    if x.ndim != 1 or y.ndim != 1:
        raise DimensionError("inputs must be 1-d vectors")
    if x.shape[0] != y.shape[0]:
        raise DimensionError(f"length mismatch: {x.shape[0]} vs {y.shape[0]}")
    if x.shape[0] < 1:
        raise DimensionError("vectors must have at least one element")
    for name, vec in (("x", x), ("y", y)):
        if np.any((vec != 0) & (vec != 1)):
            raise DomainError(f"{name} contains non-binary values")
    c11, c10, c01, c00 = _cell_counts(x, y)
    return _mi_from_counts(c11, c10, c01, c00, x.shape[0], EngineConfig())


def mi_all_pairs_naive(
    data: BinaryMatrix | SparseBinaryMatrix, cfg: EngineConfig | None = None
) -> MIMatrix:
    """Per-pair baseline: the sequential double loop over column pairs.

    Kept deliberately free of Gram identities; this is the slow path the
    bulk backends are benchmarked against.
    """
    cfg = cfg or EngineConfig()
    dense = data if isinstance(data, BinaryMatrix) else to_dense(data)
    bits = dense.to_bits()
    n, m = bits.shape
    out = np.zeros((m, m), dtype=np.float64)
    for i in range(m):
        for j in range(i, m):
            c11, c10, c01, c00 = _cell_counts(bits[:, i], bits[:, j])
            out[i, j] = out[j, i] = _mi_from_counts(c11, c10, c01, c00, n, cfg)
    if not cfg.include_diagonal:
        np.fill_diagonal(out, 0.0)
    return MIMatrix(values=out)


def density(matrix: BinaryMatrix | SparseBinaryMatrix) -> float:
    """Fraction of ones in the dataset."""
    if isinstance(matrix, SparseBinaryMatrix):
        ones = matrix.nnz()
    else:
        ones = int(column_sums(matrix).sum())
    return ones / (matrix.n_rows * matrix.n_cols)
