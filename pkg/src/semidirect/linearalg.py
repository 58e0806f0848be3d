"""Column matroids of matrices over prime fields GF(p)."""

import random
from functools import lru_cache

import numpy as np

from .core import Matroid, as_ground, weak_leq
from .exceptions import (
    DimensionMismatch,
    GroundSetMismatch,
    ModulusTooSmall,
    NonPrimeModulus,
)

MERSENNE_31 = 2**31 - 1
MIN_GENERIC_MODULUS = 2**20


@lru_cache(maxsize=64)
def is_prime(p):
    if p < 2:
        return False
    from sympy import isprime

    return bool(isprime(p))


class FpMatrix:
    """Dense matrix over GF(p) with one label per column.

    Parameters
    ----------
    p : int
        Prime modulus.
    entries : array-like, shape (rows, len(labels))
        Integer entries; they are reduced mod ``p``.
    labels : sequence of str
        Column labels.
    """

    __slots__ = ("p", "entries", "ground")

    def __init__(self, p, entries, labels):
        if not is_prime(int(p)):
            raise NonPrimeModulus(f"{p} is not prime")
        ground = as_ground(labels)
        arr = np.array(entries, dtype=object)
        if arr.size == 0 and arr.ndim != 2:
            arr = arr.reshape(0, ground.size)
        if arr.ndim != 2 or arr.shape[1] != ground.size:
            raise DimensionMismatch(
                f"entries have shape {arr.shape}, expected (*, {ground.size})"
            )
        self.p = int(p)
        reduced = [[int(v) % self.p for v in row] for row in arr]
        self.entries = np.array(reduced, dtype=object).reshape(arr.shape)
        self.ground = ground

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def labels(self):
        return self.ground.labels

    def column(self, j):
        return [int(v) for v in self.entries[:, j]]

    def __eq__(self, other):
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return (
            self.p == other.p
            and self.ground == other.ground
            and self.entries.shape == other.entries.shape
            and bool(np.all(self.entries == other.entries))
        )

    def __repr__(self):
        return f"FpMatrix(p={self.p}, shape={self.entries.shape}, labels={list(self.labels)!r})"


def _reduce(vec, basis, p):
    # basis vectors are normalized (pivot entry 1) and each is zero at the pivots
    # of the vectors inserted before it, so one pass in insertion order suffices.
    v = list(vec)
    for pivot, row in basis:
        c = v[pivot]
        if c:
            v = [(x - c * y) % p for x, y in zip(v, row)]
    return v


def column_matroid(D):
    """Matroid of linear dependence among the columns of ``D``."""
    n, p = D.cols, D.p
    cols = [D.column(j) for j in range(n)]
    size = 1 << n
    table = np.zeros(size, dtype=np.int64)
    bases = [None] * size
    bases[0] = ()
    for m in range(1, size):
        e = m.bit_length() - 1
        parent = m ^ (1 << e)
        basis = bases[parent]
        v = _reduce(cols[e], basis, p)
        pivot = next((k for k, x in enumerate(v) if x), None)
        if pivot is None:
            bases[m] = basis
            table[m] = table[parent]
        else:
            inv = pow(v[pivot], p - 2, p)
            bases[m] = basis + ((pivot, [(x * inv) % p for x in v]),)
            table[m] = table[parent] + 1
    return Matroid(D.ground, table)


def matrix_rank(D, columns=None):
    """Rank over GF(p) of the chosen columns (all of them by default)."""
    idx = range(D.cols) if columns is None else [D.ground.index(c) for c in columns]
    basis = ()
    for j in idx:
        v = _reduce(D.column(j), basis, D.p)
        pivot = next((k for k, x in enumerate(v) if x), None)
        if pivot is not None:
            inv = pow(v[pivot], D.p - 2, D.p)
            basis = basis + ((pivot, [(x * inv) % D.p for x in v]),)
    return len(basis)


def block_triangular(A, B, U):
    """Assemble ``[[A, U], [0, B]]``; ``U`` may be an FpMatrix or a plain 2-D array."""
    if A.p != B.p:
        raise DimensionMismatch(f"moduli differ: {A.p} vs {B.p}")
    if set(A.labels) & set(B.labels):
        raise DimensionMismatch("A and B share column labels")
    U_entries = U.entries if isinstance(U, FpMatrix) else np.array(U, dtype=object)
    if U_entries.size == 0:
        U_entries = np.zeros((A.rows, B.cols), dtype=object)
    if U_entries.shape != (A.rows, B.cols):
        raise DimensionMismatch(
            f"U has shape {U_entries.shape}, expected {(A.rows, B.cols)}"
        )
    top = np.concatenate([A.entries, U_entries.astype(object)], axis=1)
    bottom = np.concatenate(
        [np.zeros((B.rows, A.cols), dtype=object), B.entries], axis=1
    )
    return FpMatrix(A.p, np.concatenate([top, bottom], axis=0), A.labels + B.labels)


def contract_by_row_reduction(D, E1):
    """Matrix for the contraction of the column matroid of ``D`` by ``E1``.

    Row-reduces so a basis of the ``E1`` columns sits on a nonsingular top
    block with zeros below, then returns the lower block on the other columns.
    """
    p = D.p
    E1 = D.ground.mask(E1)
    rows = [[int(v) for v in row] for row in D.entries]
    top = 0
    for j in range(D.cols):
        if not E1 >> j & 1:
            continue
        pivot = next((i for i in range(top, len(rows)) if rows[i][j]), None)
        if pivot is None:
            continue
        rows[top], rows[pivot] = rows[pivot], rows[top]
        inv = pow(rows[top][j], p - 2, p)
        rows[top] = [(x * inv) % p for x in rows[top]]
        for i in range(top + 1, len(rows)):
            c = rows[i][j]
            if c:
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[top])]
        top += 1
    keep = [j for j in range(D.cols) if not E1 >> j & 1]
    lower = [[row[j] for j in keep] for row in rows[top:]]
    labels = [D.labels[j] for j in keep]
    return FpMatrix(p, np.array(lower, dtype=object).reshape(len(lower), len(keep)), labels)


def stack(top, bottom):
    """Put ``top`` above ``bottom`` (same modulus and column labels)."""
    if top.p != bottom.p:
        raise DimensionMismatch(f"moduli differ: {top.p} vs {bottom.p}")
    if top.ground != bottom.ground:
        raise GroundSetMismatch(f"{top.labels} vs {bottom.labels}")
    return FpMatrix(top.p, np.concatenate([top.entries, bottom.entries], axis=0), top.labels)


def scale_columns(D, scalars):
    return FpMatrix(D.p, D.entries * np.array(scalars, dtype=object)[None, :], D.labels)


def generic_union(MatG, MatH, seed=0, trials=3):
    """Probabilistic column model of the matroid union of two column matroids.

    Each column of ``MatG`` is scaled by a random nonzero scalar (standing in
    for an indeterminate) before stacking it on ``MatH``.  Over ``trials``
    draws the weak-order maximal result is kept.  The answer is never freer
    than the true union; it equals it unless some nonzero polynomial in the
    scalars happens to vanish, which the Schwartz-Zippel bound makes rare for
    large ``p``.
    """
    if MatG.p != MatH.p:
        raise DimensionMismatch(f"moduli differ: {MatG.p} vs {MatH.p}")
    if MatG.ground != MatH.ground:
        raise GroundSetMismatch(f"{MatG.labels} vs {MatH.labels}")
    if MatG.p < MIN_GENERIC_MODULUS:
        raise ModulusTooSmall(f"p={MatG.p} is below {MIN_GENERIC_MODULUS}")
    rng = random.Random(seed)
    results = []
    for _ in range(max(1, trials)):
        scalars = [rng.randrange(1, MatG.p) for _ in range(MatG.cols)]
        results.append(column_matroid(stack(scale_columns(MatG, scalars), MatH)))
    # keep the weak-order maximum; if draws are incomparable take the one
    # with the largest total rank, which is still a maximal element
    for cand in results:
        if all(weak_leq(other, cand) for other in results):
            return cand
    return max(results, key=lambda K: int(K.table.sum()))


def identity(p, labels):
    labels = list(labels)
    n = len(labels)
    return FpMatrix(p, np.eye(n, dtype=np.int64).astype(object), labels)


def random_matrix(rng, p, rows, labels, density=1.0):
    """Random matrix with entries uniform in GF(p), zeroed with prob ``1 - density``."""
    labels = list(labels)
    entries = [
        [rng.randrange(p) if rng.random() < density else 0 for _ in labels]
        for _ in range(rows)
    ]
    return FpMatrix(p, np.array(entries, dtype=object).reshape(rows, len(labels)), labels)


def random_full_row_rank(rng, p, rows, labels, max_tries=100):
    labels = list(labels)
    if rows > len(labels):
        raise DimensionMismatch(f"{rows} rows cannot have full row rank on {len(labels)} columns")
    for _ in range(max_tries):
        D = random_matrix(rng, p, rows, labels)
        if matrix_rank(D) == rows:
            return D
    raise RuntimeError("failed to draw a full-row-rank matrix")

