"""Deterministic synthetic binary datasets with controlled density.

Cells are drawn in row-major order from a splitmix64 stream seeded once per
dataset; cell value is 1 iff draw / 2^64 < density.  splitmix64 is a small,
published mixing function, so identical specs reproduce bit-identical
matrices on any platform or implementation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .binmat import BinaryMatrix, from_bits
from .errors import DimensionError, DomainError

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)

_CHUNK = 1 << 22  # draws per block; bounds temporary memory at 32 MiB


@dataclass(frozen=True)
class GenSpec:
    """Dataset shape, ones-density and stream seed."""

    n_rows: int
    n_cols: int
    density: float
    seed: int

    def __post_init__(self):
        if self.n_rows < 1 or self.n_cols < 1:
            raise DimensionError("n_rows and n_cols must be at least 1")
        if not 0.0 <= self.density <= 1.0:
            raise DomainError(f"density must lie in [0, 1], got {self.density}")
        if not 0 <= self.seed < 1 << 64:
            raise DomainError("seed must fit in an unsigned 64-bit integer")


def _splitmix64_block(seed: int, start: int, count: int) -> np.ndarray:
    """Draws start..start+count-1 of the stream (draw k uses state seed + k*gamma)."""
    idx = np.arange(start, start + count, dtype=np.uint64)
    z = np.uint64(seed) + idx * _GAMMA
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def _threshold(density: float) -> int:
    """Smallest integer t with (draw < t) == (draw / 2^64 < density)."""
    return math.ceil(density * (1 << 64))


def generate(spec: GenSpec) -> BinaryMatrix:
    """Produce the matrix for a spec; single-threaded and fully deterministic."""
    total = spec.n_rows * spec.n_cols
    bits = np.empty(total, dtype=np.uint8)
    t = _threshold(spec.density)
    if t <= 0:
        bits[:] = 0
    elif t >= 1 << 64:
        bits[:] = 1
    else:
        limit = np.uint64(t)
        for start in range(0, total, _CHUNK):
            count = min(_CHUNK, total - start)
            draws = _splitmix64_block(spec.seed, start + 1, count)
            bits[start : start + count] = draws < limit
    return from_bits(bits.reshape(spec.n_rows, spec.n_cols))
