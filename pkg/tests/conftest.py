"""Shared helpers: random dataset makers and independent brute-force oracles.

The oracles here deliberately avoid the package's packed-word machinery:
counts come from explicit row enumeration over plain Python ints, so they
stay valid even if every kernel is broken the same way.
"""

from __future__ import annotations

import numpy as np
import pytest

from mimatrix.binmat import BinaryMatrix, from_bits


def rand_bits(rng: np.random.Generator, n: int, m: int, density: float) -> np.ndarray:
    return (rng.random((n, m)) < density).astype(np.uint8)


def rand_matrix(rng: np.random.Generator, n: int, m: int, density: float) -> BinaryMatrix:
    return from_bits(rand_bits(rng, n, m, density))


def brute_force_gram(bits: np.ndarray) -> dict:
    """Count all four cells for every pair by looping over rows in Python."""
    n, m = bits.shape
    rows = [[int(v) for v in bits[r]] for r in range(n)]
    g11 = [[0] * m for _ in range(m)]
    g00 = [[0] * m for _ in range(m)]
    g01 = [[0] * m for _ in range(m)]
    for row in rows:
        for i in range(m):
            a = row[i]
            for j in range(m):
                b = row[j]
                if a == 1 and b == 1:
                    g11[i][j] += 1
                elif a == 0 and b == 0:
                    g00[i][j] += 1
                elif a == 0 and b == 1:
                    g01[i][j] += 1
    return {
        "g11": np.array(g11, dtype=np.int64),
        "g00": np.array(g00, dtype=np.int64),
        "g01": np.array(g01, dtype=np.int64),
    }


@pytest.fixture
def fixture_3x2() -> BinaryMatrix:
    """The 3x2 dataset used throughout: rows (1,0), (0,1), (1,1)."""
    return from_bits(np.array([[1, 0], [0, 1], [1, 1]], dtype=np.uint8))
