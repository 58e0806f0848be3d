"""Bitmask helpers shared by every module.

Subsets of an n-element ground set are integers in ``range(2**n)``; bit ``i``
stands for the i-th label.  Whole-table operations work on numpy arrays indexed
by mask.
"""

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def all_masks(n):
    arr = np.arange(1 << n, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=None)
def popcounts(n):
    arr = np.bitwise_count(all_masks(n)).astype(np.int64)
    arr.setflags(write=False)
    return arr


def popcount(mask):
    return int(mask).bit_count()


def bits_of(mask):
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def submasks(mask):
    """Every submask of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def subset_min(values, n):
    """``out[X] = min(values[W] for W subset of X)`` via the subset-min transform."""
    out = np.array(values, dtype=np.int64, copy=True)
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        np.minimum(view[:, 1, :], view[:, 0, :], out=view[:, 1, :])
    return out


def subset_sum(values, n):
    """``out[X] = sum(values[W] for W subset of X)`` (zeta transform)."""
    out = np.array(values, dtype=np.int64, copy=True)
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return out


def spread(n_small, positions):
    """Map each mask over ``n_small`` bits to the mask with bit j moved to ``positions[j]``."""
    masks = all_masks(n_small)
    out = np.zeros(1 << n_small, dtype=np.int64)
    for j, pos in enumerate(positions):
        out |= ((masks >> j) & 1) << pos
    return out
