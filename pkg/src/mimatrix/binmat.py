"""Binary matrix representations: dense bit-packed and sparse index lists.

The dense layout packs each column into ``ceil(n_rows / 64)`` 64-bit words,
column-major, with bit ``r`` of word ``w`` holding row ``w * 64 + r``.  Bits
past the last row are always zero, so population counts over raw words are
exact column statistics.  Both types are immutable after construction and
safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionError, DomainError

WORD_BITS = 64


def _n_words(n_rows: int) -> int:
    return (n_rows + WORD_BITS - 1) // WORD_BITS


def _pad_mask(n_rows: int) -> np.uint64:
    """Mask of valid bits in the last word of a column."""
    rem = n_rows % WORD_BITS
    if rem == 0:
        return np.uint64(0xFFFFFFFFFFFFFFFF)
    return np.uint64((1 << rem) - 1)


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack an (n, m) array of {0,1} into (m, n_words) uint64, column-major.

    Bit order within each word is little-endian: row ``w*64 + r`` lands in
    bit ``r`` of word ``w``.
    """
    n, m = bits.shape
    nw = _n_words(n)
    padded = np.zeros((m, nw * WORD_BITS), dtype=np.uint8)
    padded[:, :n] = bits.T
    packed = np.packbits(padded, axis=1, bitorder="little")
    words = np.ascontiguousarray(packed).view("<u8").astype(np.uint64, copy=False)
    return words.reshape(m, nw)


def unpack_bits(words: np.ndarray, n_rows: int) -> np.ndarray:
    """Inverse of :func:`pack_bits`; returns an (n, m) uint8 array."""
    m, nw = words.shape
    as_bytes = words.astype("<u8").view(np.uint8).reshape(m, nw * 8)
    bits = np.unpackbits(as_bytes, axis=1, bitorder="little", count=n_rows)
    return np.ascontiguousarray(bits.T)


@dataclass(frozen=True, eq=False)
class BinaryMatrix:
    """Immutable n x m binary dataset, bit-packed per column.

    ``words`` has shape (n_cols, n_words) so the per-column word streams that
    the Gram kernels iterate over are contiguous.
    """

    n_rows: int
    n_cols: int
    words: np.ndarray

    def __post_init__(self):
        if self.n_rows < 1 or self.n_cols < 1:
            raise DimensionError("matrix must have at least one row and one column")
        expected = (self.n_cols, _n_words(self.n_rows))
        if self.words.dtype != np.uint64 or self.words.shape != expected:
            raise DimensionError(
                f"words must be uint64 with shape {expected}, got "
                f"{self.words.dtype} {self.words.shape}"
            )
        pad = _pad_mask(self.n_rows)
        if np.any(self.words[:, -1] & ~pad):
            raise DomainError("padding bits beyond the last row must be zero")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return (
            self.n_rows == other.n_rows
            and self.n_cols == other.n_cols
            and np.array_equal(self.words, other.words)
        )

    def to_bits(self) -> np.ndarray:
        """Unpack to a row-major (n_rows, n_cols) uint8 array."""
        return unpack_bits(self.words, self.n_rows)

    def column_bits(self, j: int) -> np.ndarray:
        """Unpack a single column to a length-n_rows uint8 vector."""
        return unpack_bits(self.words[j : j + 1], self.n_rows)[:, 0]


@dataclass(frozen=True, eq=False)
class SparseBinaryMatrix:
    """Per-column sorted row-index lists; same data model as BinaryMatrix."""

    n_rows: int
    n_cols: int
    col_indices: tuple

    def __post_init__(self):
        if self.n_rows < 1 or self.n_cols < 1:
            raise DimensionError("matrix must have at least one row and one column")
        if len(self.col_indices) != self.n_cols:
            raise DimensionError("col_indices must hold one list per column")
        for j, idx in enumerate(self.col_indices):
            if idx.size == 0:
                continue
            if idx[0] < 0 or idx[-1] >= self.n_rows:
                raise DomainError(f"column {j}: row index out of range [0, {self.n_rows})")
            if np.any(np.diff(idx) <= 0):
                raise DomainError(f"column {j}: row indices must be strictly increasing")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseBinaryMatrix):
            return NotImplemented
        return (
            self.n_rows == other.n_rows
            and self.n_cols == other.n_cols
            and all(
                np.array_equal(a, b) for a, b in zip(self.col_indices, other.col_indices)
            )
        )

    def nnz(self) -> int:
        return int(sum(idx.size for idx in self.col_indices))


def from_rows(rows: Sequence[Sequence[int]] | np.ndarray) -> BinaryMatrix:
    """Build a BinaryMatrix from row vectors of {0,1} values.

    Raises DimensionError for ragged input and DomainError for any value
    outside {0,1}.
    """
    if isinstance(rows, np.ndarray):
        arr = rows
    else:
        rows = list(rows)
        if len(rows) == 0:
            raise DimensionError("need at least one row")
        try:
            lengths = {len(r) for r in rows}
        except TypeError:
            raise DimensionError("rows must be sequences of values") from None
        if len(lengths) != 1:
            raise DimensionError(f"ragged rows: lengths {sorted(lengths)}")
        arr = np.asarray(rows)
    if arr.ndim != 2:
        raise DimensionError(f"expected 2-d row data, got ndim={arr.ndim}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionError("matrix must have at least one row and one column")
    if not np.issubdtype(arr.dtype, np.integer) and arr.dtype != np.bool_:
        raise DomainError(f"values must be integer 0/1, got dtype {arr.dtype}")
    bits = arr.astype(np.uint8, copy=False)
    if arr.dtype != np.bool_ and np.any((arr != 0) & (arr != 1)):
        bad = np.argwhere((arr != 0) & (arr != 1))[0]
        raise DomainError(f"non-binary value at row {bad[0]}, column {bad[1]}")
    n, m = bits.shape
    return BinaryMatrix(n, m, pack_bits(bits))


def from_bits(bits: np.ndarray) -> BinaryMatrix:
    """Like :func:`from_rows` but assumes a validated uint8 {0,1} array."""
    n, m = bits.shape
    return BinaryMatrix(n, m, pack_bits(bits))


def column_sums(matrix: BinaryMatrix) -> np.ndarray:
    """Number of ones per column as uint64 (population count of the words)."""
    return np.bitwise_count(matrix.words).sum(axis=1, dtype=np.uint64)


def to_sparse(matrix: BinaryMatrix) -> SparseBinaryMatrix:
    """Convert to per-column sorted index lists; lossless."""
    bits = matrix.to_bits()
    cols = tuple(
        np.flatnonzero(bits[:, j]).astype(np.int64) for j in range(matrix.n_cols)
    )
    return SparseBinaryMatrix(matrix.n_rows, matrix.n_cols, cols)


def to_dense(sparse: SparseBinaryMatrix) -> BinaryMatrix:
    """Convert back to the bit-packed representation; lossless."""
    bits = np.zeros((sparse.n_rows, sparse.n_cols), dtype=np.uint8)
    for j, idx in enumerate(sparse.col_indices):
        bits[idx, j] = 1
    return from_bits(bits)
