"""Every matroid on a small labeled ground set, by brute force over basis families."""

from functools import lru_cache
from itertools import combinations

import numpy as np

from .._bits import all_masks
from ..core import Matroid, check_axioms
from ..exceptions import AxiomViolation

CATALOG_MAX_N = 5


@lru_cache(maxsize=None)
def _tables(n):
    if n > CATALOG_MAX_N:
        raise ValueError(f"catalog only goes up to {CATALOG_MAX_N} elements")
    masks = all_masks(n)
    out = []
    for r in range(n + 1):
        cands = [sum(1 << i for i in c) for c in combinations(range(n), r)]
        # popcount of (mask & basis) for each candidate basis, one row per basis
        overlap = np.stack([np.bitwise_count(masks & b) for b in cands]).astype(np.int64)
        for fam in range(1, 1 << len(cands)):
            rows = [k for k in range(len(cands)) if fam >> k & 1]
            table = overlap[rows].max(axis=0)
            try:
                check_axioms(table, n)
            except AxiomViolation:
                continue
            # the rank function of a family always has bases containing the
            # family; it is the family's own matroid only if nothing was added
            if int(np.count_nonzero((table == r) & (np.bitwise_count(masks) == r))) == len(rows):
                table.setflags(write=False)
                out.append(table)
    return tuple(out)


def all_matroids(labels):
    """All matroids on ``labels`` (at most five of them), as a list."""
    labels = list(labels)
    return [Matroid(labels, t, validate=False) for t in _tables(len(labels))]


def table_stack(n):
    """The rank tables of :func:`all_matroids` stacked into one array."""
    return np.stack(_tables(n))
