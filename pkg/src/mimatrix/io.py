"""File formats: 0/1 CSV, the packed binary container, sparse triplets,
and the MI result matrix.

The packed container ("BMI1") mirrors the in-memory layout so loading large
datasets is a straight copy:

    bytes 0..3    magic "BMI1"
    bytes 4..11   n_rows, unsigned 64-bit little-endian
    bytes 12..19  n_cols, unsigned 64-bit little-endian
    payload       n_cols blocks of ceil(n_rows/64) little-endian 64-bit words;
                  bit r of word w is row w*64 + r, padding bits zero

All multi-byte integers in every format are little-endian.  Readers reject
nonzero padding bits outright: silent corruption there would skew every
downstream count.
"""

from __future__ import annotations

import struct
from pathlib import Path
from typing import IO

import numpy as np

from .binmat import (
    BinaryMatrix,
    SparseBinaryMatrix,
    _n_words,
    _pad_mask,
    from_bits,
)
from .engine import MIMatrix
from .errors import DimensionError, DomainError, FormatError

_MAGIC = b"BMI1"
_HEADER = struct.Struct("<4sQQ")


# ---------------------------------------------------------------------------
# CSV of 0/1 tokens


def read_csv(path: str | Path) -> BinaryMatrix:
    """Parse comma-separated 0/1 rows; a single leading header line (any
    non-binary token in line 1) is skipped automatically."""
    path = Path(path)
    rows: list[np.ndarray] = []
    width = -1
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            tokens = [t.strip() for t in line.split(",")]
            if lineno == 1 and any(t not in ("0", "1") for t in tokens):
                continue  # header line
            if width == -1:
                width = len(tokens)
            elif len(tokens) != width:
                raise DimensionError(
                    f"{path}:{lineno}: expected {width} values, got {len(tokens)}"
                )
            for col, tok in enumerate(tokens, start=1):
                if tok not in ("0", "1"):
                    raise FormatError(
                        f"{path}:{lineno}:{col}: invalid token {tok!r}, expected 0 or 1"
                    )
            rows.append(np.array([tok == "1" for tok in tokens], dtype=np.uint8))
    if not rows:
        raise FormatError(f"{path}: no data rows")
    return from_bits(np.vstack(rows))


def write_csv(matrix: BinaryMatrix, path: str | Path) -> None:
    """Write one comma-separated 0/1 line per row, no header."""
    bits = matrix.to_bits()
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        np.savetxt(fh, bits, fmt="%d", delimiter=",")


# ---------------------------------------------------------------------------
# Packed binary container


def write_bmi(matrix: BinaryMatrix, path: str | Path) -> None:
    with Path(path).open("wb") as fh:
        fh.write(_HEADER.pack(_MAGIC, matrix.n_rows, matrix.n_cols))
        fh.write(matrix.words.astype("<u8").tobytes())


def read_bmi(path: str | Path) -> BinaryMatrix:
    path = Path(path)
    raw = path.read_bytes()
    if len(raw) < _HEADER.size:
        raise FormatError(f"{path}: file shorter than the 20-byte header")
    magic, n_rows, n_cols = _HEADER.unpack_from(raw)
    if magic != _MAGIC:
        raise FormatError(f"{path}: bad magic {magic!r}, expected {_MAGIC!r}")
    if n_rows < 1 or n_cols < 1:
        raise FormatError(f"{path}: invalid dimensions {n_rows}x{n_cols}")
    nw = _n_words(n_rows)
    expected = _HEADER.size + n_cols * nw * 8
    if len(raw) != expected:
        raise FormatError(
            f"{path}: payload length {len(raw) - _HEADER.size} does not match "
            f"{n_cols} columns of {nw} words ({expected - _HEADER.size} bytes)"
        )
    words = (
        np.frombuffer(raw, dtype="<u8", offset=_HEADER.size)
        .astype(np.uint64)
        .reshape(n_cols, nw)
    )
    if np.any(words[:, -1] & ~_pad_mask(n_rows)):
        raise FormatError(f"{path}: nonzero padding bits past row {n_rows - 1}")
    return BinaryMatrix(n_rows, n_cols, words)


# ---------------------------------------------------------------------------
# Sparse triplet text format


def read_triplets(path: str | Path) -> SparseBinaryMatrix:
    """Read "n_rows n_cols nnz" then nnz "row col" lines (0-based, any order)."""
    path = Path(path)
    with path.open("r", encoding="utf-8") as fh:
        header = fh.readline()
        parts = header.split()
        if len(parts) != 3:
            raise FormatError(f"{path}:1: expected 'n_rows n_cols nnz'")
        try:
            n_rows, n_cols, nnz = (int(p) for p in parts)
        except ValueError:
            raise FormatError(f"{path}:1: non-integer header field") from None
        if n_rows < 1 or n_cols < 1 or nnz < 0:
            raise FormatError(f"{path}:1: invalid dimensions {n_rows} {n_cols} {nnz}")
        per_col: list[list[int]] = [[] for _ in range(n_cols)]
        seen = 0
        for lineno, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 2:
                raise FormatError(f"{path}:{lineno}: expected 'row col'")
            try:
                r, c = int(fields[0]), int(fields[1])
            except ValueError:
                raise FormatError(f"{path}:{lineno}: non-integer entry") from None
            if not (0 <= r < n_rows and 0 <= c < n_cols):
                raise FormatError(
                    f"{path}:{lineno}: entry ({r}, {c}) outside {n_rows}x{n_cols}"
                )
            per_col[c].append(r)
            seen += 1
    if seen != nnz:
        raise FormatError(f"{path}: header declares nnz={nnz} but found {seen} entries")
    cols = []
    for c, rows in enumerate(per_col):
        idx = np.array(sorted(rows), dtype=np.int64)
        if idx.size > 1 and np.any(np.diff(idx) == 0):
            dup = int(idx[np.flatnonzero(np.diff(idx) == 0)[0]])
            raise FormatError(f"{path}: duplicate entry ({dup}, {c})")
        cols.append(idx)
    return SparseBinaryMatrix(n_rows, n_cols, tuple(cols))


def write_triplets(sparse: SparseBinaryMatrix, path: str | Path) -> None:
    """Write entries in canonical column-major order."""
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{sparse.n_rows} {sparse.n_cols} {sparse.nnz()}\n")
        for c, idx in enumerate(sparse.col_indices):
            for r in idx:
                fh.write(f"{r} {c}\n")


# ---------------------------------------------------------------------------
# MI result matrix


def write_mi_matrix(
    mi: MIMatrix, dest: str | Path | IO[str], precision: int = 9
) -> None:
    """Write the m x m matrix as CSV with fixed decimal places.

    MI between binary variables never exceeds 1 bit, so fixed-point keeps
    the full significance at the default precision.
    """
    if precision < 1:
        raise DomainError(f"precision must be at least 1, got {precision}")

    def _emit(fh: IO[str]) -> None:
        for row in mi.values:
            fh.write(",".join(f"{v:.{precision}f}" for v in row))
            fh.write("\n")

    if hasattr(dest, "write"):
        _emit(dest)
    else:
        with Path(dest).open("w", encoding="utf-8", newline="\n") as fh:
            _emit(fh)


def read_mi_matrix(path: str | Path) -> np.ndarray:
    """Load a matrix written by :func:`write_mi_matrix`."""
    values = np.loadtxt(path, delimiter=",", ndmin=2, dtype=np.float64)
    return values
