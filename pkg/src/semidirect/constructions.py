"""Matroid constructions: sums, unions, principal extensions and sums, Higgs lifts.

Every construction that combines a matroid on S with one on T returns a
matroid whose ground set lists S's labels first, then T's.
"""

from dataclasses import dataclass

import numpy as np

from ._bits import all_masks, popcounts, subset_min
from .core import Matroid, is_quotient
from .exceptions import GroundSetMismatch, LabelCollision, NotAQuotient, RankOutOfRange


def _check_disjoint(labels_a, labels_b):
    clash = set(labels_a) & set(labels_b)
    if clash:
        raise LabelCollision(f"labels used twice: {sorted(clash)}")


def uniform(r, labels):
    labels = list(labels)
    if not 0 <= r <= len(labels):
        raise RankOutOfRange(f"rank {r} not in [0, {len(labels)}]")
    return Matroid(labels, np.minimum(popcounts(len(labels)), r))


def free(labels):
    labels = list(labels)
    return uniform(len(labels), labels)


def loops_on(labels):
    return uniform(0, labels)


def direct_sum(M, N):
    _check_disjoint(M.labels, N.labels)
    table = (N.table[:, None] + M.table[None, :]).ravel()
    return Matroid(M.labels + N.labels, table)


def add_loops(N, extra_labels):
    """``N`` plus a loop for each new label; the loops come first in the ground order."""
    return direct_sum(loops_on(extra_labels), N)


def _rank_of_union(tg, th, n):
    # r(X) = |X| + min over W subset X of (r_G(W) + r_H(W) - |W|)
    pc = popcounts(n)
    return pc + subset_min(tg + th - pc, n)


def union(G, H):
    """Matroid union: ``r(X) = min_{W <= X} r_G(W) + r_H(W) + |X - W|``."""
    if G.ground != H.ground:
        raise GroundSetMismatch(f"{G.labels} vs {H.labels}")
    return Matroid(G.ground, _rank_of_union(G.table, H.table, G.size))


def intersection(G, H):
    """Matroid intersection, the dual of the union of the duals."""
    return union(G.dual(), H.dual()).dual()


def principal_extension(K, A, b):
    """Add ``b`` freely on the flat of ``K`` spanned by ``A``."""
    _check_disjoint(K.labels, [b])
    A = K.mask(A)
    masks = all_masks(K.size)
    t = K.table
    with_b = np.minimum(t[masks | A], t + 1)
    return Matroid(K.labels + (b,), np.concatenate([t, with_b]))


def _free_on_flat_table(M, A, B, nT):
    # min(r_M(X + A), r_M(X) + |Y & B|), indexed by X + Y over S then T
    tm = all_masks(nT)
    rm = M.table
    spanned = rm[all_masks(M.size) | A]
    count = np.bitwise_count(tm & B)
    return np.minimum(spanned[None, :], rm[None, :] + count[:, None]).ravel()


def extension_on_flat(M, A, B, T):
    """``M^+(A, B)``: each label of ``B`` free on ``cl_M(A)``, the rest of ``T`` loops.

    ``T`` lists every new label (fixing the order); ``B`` is a subset of ``T``.
    """
    T = list(T)
    _check_disjoint(M.labels, T)
    A = M.mask(A)
    index = {lab: i for i, lab in enumerate(T)}
    Bm = 0
    for lab in B:
        if lab not in index:
            raise LabelCollision(f"{lab!r} is not among the new labels")
        Bm |= 1 << index[lab]
    return Matroid(M.labels + tuple(T), _free_on_flat_table(M, A, Bm, len(T)))


def principal_sum_table(M, N, A, B):
    """Rank table of ``(M, N; A, B)`` from its closed form, without validation."""
    rm, rn = M.table, N.table
    sm, tm = all_masks(M.size), all_masks(N.size)
    first = rm[sm | A][None, :] + rn[:, None]
    second = rm[None, :] + (rn[tm & ~B] + np.bitwise_count(tm & B))[:, None]
    return np.minimum(first, second).ravel()


def principal_sum(M, N, A, B):
    """The principal sum ``(M, N; A, B)``.

    Rank of ``X + Y`` is ``min(r_M(X+A) + r_N(Y), r_M(X) + r_N(Y-B) + |Y & B|)``.
    """
    _check_disjoint(M.labels, N.labels)
    A, B = M.mask(A), N.mask(B)
    return Matroid(M.labels + N.labels, principal_sum_table(M, N, A, B))


def principal_sum_by_union(M, N, A, B):
    """The same principal sum built as ``M^+(A, B) v N_0``."""
    B_labels = N.ground.labels_of(N.mask(B))
    return union(extension_on_flat(M, A, B_labels, N.labels), add_loops(N, M.labels))


@dataclass(frozen=True)
class PrincipalSumSpec:
    """The data ``(M, N; A, B)`` of a principal sum; ``A``/``B`` are masks."""

    M: Matroid
    N: Matroid
    A: int
    B: int

    def __post_init__(self):
        _check_disjoint(self.M.labels, self.N.labels)
        object.__setattr__(self, "A", self.M.mask(self.A))
        object.__setattr__(self, "B", self.N.mask(self.B))

    def build(self):
        return principal_sum(self.M, self.N, self.A, self.B)


def free_product(M, N):
    return principal_sum(M, N, M.full, N.full)


def truncation(M, k):
    if not 0 <= k <= M.rank():
        raise RankOutOfRange(f"cannot truncate rank {M.rank()} to {k}")
    return Matroid(M.ground, np.minimum(M.table, k))


def free_extension(M, e):
    return principal_extension(M, M.full, e)


def free_coextension(M, e):
    return free_extension(M.dual(), e).dual()


def higgs_lift(Q, L, i):
    """The i-th Higgs lift of ``Q`` toward ``L``: ``r = min(r_Q + i, r_L)``.

    Indices below 0 give ``Q`` and indices above ``r(L) - r(Q)`` give ``L``.
    """
    if not is_quotient(Q, L):
        raise NotAQuotient("Higgs lift needs Q to be a quotient of L")
    if i < 0:
        return Q
    if i > L.rank() - Q.rank():
        return L
    return Matroid(Q.ground, np.minimum(Q.table + i, L.table))


@dataclass(frozen=True)
class HiggsSpec:
    Q: Matroid
    L: Matroid
    i: int

    def __post_init__(self):
        if not is_quotient(self.Q, self.L):
            raise NotAQuotient("Higgs lift needs Q to be a quotient of L")

    def build(self):
        return higgs_lift(self.Q, self.L, self.i)


def higgs_semidirect(M, M_q, N, N_l):
    """Semidirect sum of ``M`` and ``N`` as a Higgs lift of ``M_q + N`` toward ``M + N_l``."""
    if not is_quotient(M_q, M):
        raise NotAQuotient("M_q must be a quotient of M")
    if not is_quotient(N, N_l):
        raise NotAQuotient("N must be a quotient of N_l")
    Q = direct_sum(M_q, N)
    L = direct_sum(M, N_l)
    return higgs_lift(Q, L, M.rank() - M_q.rank())


def principal_sum_by_higgs(M, N, A, B):
    """The same principal sum as the ``r_M(A)``-th Higgs lift of the standard pair."""
    A, B = M.mask(A), N.mask(B)
    M_q = direct_sum(M.contract(A), loops_on(M.ground.labels_of(A))).reorder(M.labels)
    N_l = direct_sum(N.delete(B), free(N.ground.labels_of(B))).reorder(N.labels)
    return higgs_semidirect(M, M_q, N, N_l)


def make_loops(M, X):
    """Turn every element of ``X`` into a loop, leaving the rest of ``M`` as is."""
    X = M.mask(X)
    return Matroid(M.ground, M.table[all_masks(M.size) & ~X])
