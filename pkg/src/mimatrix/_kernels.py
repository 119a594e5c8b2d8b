"""Numba kernels for the bit-packed co-occurrence counting paths.

Kept in a separate module so that code paths which never touch a Gram
computation (dataset generation, file conversion) do not pay the numba
import cost.  All kernels produce exact integer counts, so results are
bit-identical regardless of thread count.

The unoptimized path runs three of these kernels, one full pass over the
packed words per count matrix; the optimized path runs only the ones-ones
kernel and derives the rest in closed form.
"""

from __future__ import annotations

import warnings
from contextlib import contextmanager

import numpy as np

warnings.filterwarnings("ignore", message=".*TBB.*")  # harmless threading-layer probe

from numba import njit, prange  # noqa: E402

_FULL = np.uint64(0xFFFFFFFFFFFFFFFF)


@njit(inline="always")
def _popcount64(x):
    # SWAR population count; LLVM lowers this to native popcnt where available.
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(inline="always")
def _gram_ones_row(words, i, out):
    m, nw = words.shape
    for j in range(i, m):
        acc = np.uint64(0)
        for w in range(nw):
            acc += _popcount64(words[i, w] & words[j, w])
        c = np.int64(acc)
        out[i, j] = c
        out[j, i] = c


@njit(parallel=True, cache=True)
def gram_ones_kernel(words, out):
    """Co-occurring ones: AND+popcount over the upper triangle, mirrored.

    Rows u and m-1-u are paired per parallel iteration so the triangular
    workload stays balanced across threads.
    """
    m = words.shape[0]
    half = (m + 1) // 2
    for u in prange(half):
        _gram_ones_row(words, u, out)
        i2 = m - 1 - u
        if i2 != u:
            _gram_ones_row(words, i2, out)


@njit(inline="always")
def _gram_zeros_row(words, i, pad_mask, out):
    m, nw = words.shape
    for j in range(i, m):
        acc = np.uint64(0)
        for w in range(nw):
            mask = pad_mask if w == nw - 1 else _FULL
            acc += _popcount64(~words[i, w] & ~words[j, w] & mask)
        c = np.int64(acc)
        out[i, j] = c
        out[j, i] = c


@njit(parallel=True, cache=True)
def gram_zeros_kernel(words, pad_mask, out):
    """Co-occurring zeros: negate both columns word-wise, mask padding, popcount."""
    m = words.shape[0]
    half = (m + 1) // 2
    for u in prange(half):
        _gram_zeros_row(words, u, pad_mask, out)
        i2 = m - 1 - u
        if i2 != u:
            _gram_zeros_row(words, i2, pad_mask, out)


@njit(parallel=True, cache=True)
def gram_mixed_kernel(words, pad_mask, out):
    """Zero-one co-occurrences for every ordered pair: out[i][j] counts rows
    with column i = 0 and column j = 1.  Not symmetric, so all m^2 entries
    get their own pass."""
    m, nw = words.shape
    for i in prange(m):
        for j in range(m):
            acc = np.uint64(0)
            for w in range(nw):
                mask = pad_mask if w == nw - 1 else _FULL
                acc += _popcount64(~words[i, w] & words[j, w] & mask)
            out[i, j] = np.int64(acc)


@contextmanager
def thread_limit(threads: int):
    """Temporarily cap numba's worker count; 0 keeps the automatic default."""
    if threads and threads > 0:
        import numba

        old = numba.get_num_threads()
        numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))
        try:
            yield
        finally:
            numba.set_num_threads(old)
    else:
        yield
