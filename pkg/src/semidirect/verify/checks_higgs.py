"""Checks for Higgs lifts and for the weak-order interval of semidirect sums."""

import numpy as np

from .. import constructions as C
from .._bits import all_masks
from ..core import Matroid, is_quotient, weak_leq
from ..report import CheckReport
from . import catalog
from .checks_union import _some_semidirect_sum, semidirect_mismatch
from .generators import InstanceGen, labels, sub_seed
from ._util import fail, mj, table_mismatch
from .registry import instance_check, register


def _freest_mismatch(Q, L, i, H):
    """On tiny ground sets, every quotient of L with Q as quotient and rank
    r(Q) + i must lie weakly below H."""
    n = Q.size
    tables = catalog.table_stack(n)
    for t in tables:
        if t[-1] != Q.rank() + i:
            continue
        K = Matroid(Q.labels, t, validate=False)
        if is_quotient(Q, K) and is_quotient(K, L) and not weak_leq(K, H):
            return K
    return None


@instance_check("higgs")
def _higgs(gen):
    """Higgs lifts: quotient sandwich and rank, freest such quotient (tiny
    cases), duality, restriction and contraction formulas, the semidirect-sum
    construction, and principal sums and free products as Higgs lifts."""
    E = labels("e", gen.size(1, min(2 * gen.max_n, 8)))
    Q, L = gen.quotient_pair(E)
    gap = L.rank() - Q.rank()
    i = gen.rng.randint(-1, gap + 1)
    H = C.higgs_lift(Q, L, i)
    inst = {"Q": mj(Q), "L": mj(L), "i": i}
    if 0 <= i <= gap:
        if not (is_quotient(Q, H) and is_quotient(H, L)):
            return fail("Q <- H <- L quotients", inst)
        if H.rank() != Q.rank() + i:
            return fail("rank", inst, expected=Q.rank() + i, got=H.rank())
        if len(E) <= 4:
            K = _freest_mismatch(Q, L, i, H)
            if K is not None:
                return fail("freest quotient", inst, freer=mj(K))
    bad = table_mismatch("duality", inst, C.higgs_lift(L.dual(), Q.dual(), gap - i), H.dual())
    if bad:
        return bad
    W = gen.subset(H.full)
    Wl = H.ground.labels_of(W)
    inst = dict(inst, W=Wl)
    bad = table_mismatch("restriction", inst, C.higgs_lift(Q.restrict(Wl), L.restrict(Wl), i), H.restrict(Wl))
    if bad:
        return bad
    k = L.rank(W) - Q.rank(W)
    bad = table_mismatch(
        "contraction", inst, C.higgs_lift(Q.contract(W), L.contract(W), i - k), H.contract(W)
    )
    if bad:
        return bad
    # semidirect sums from a quotient of M and a lift of N
    S, T = labels("s", gen.size()), labels("t", gen.size())
    M, N = gen.matroid(S), gen.matroid(T)
    M_q, N_l = gen.quotient_of(M), gen.lift_of(N)
    inst = {"M": mj(M), "M_q": mj(M_q), "N": mj(N), "N_l": mj(N_l)}
    if not is_quotient(C.direct_sum(M_q, N), C.direct_sum(M, N_l)):
        return fail("Q is a quotient of L", inst)
    bad = semidirect_mismatch("Higgs semidirect sum", inst, C.higgs_semidirect(M, M_q, N, N_l), M, N)
    if bad:
        return bad
    spec = gen.principal_spec()
    M, N = spec.M, spec.N
    inst = {"M": mj(M), "N": mj(N), "A": M.ground.labels_of(spec.A), "B": N.ground.labels_of(spec.B)}
    bad = table_mismatch(
        "principal sum as Higgs lift", inst, spec.build(), C.principal_sum_by_higgs(M, N, spec.A, spec.B)
    )
    if bad:
        return bad
    low = C.direct_sum(C.loops_on(M.labels), N)
    high = C.direct_sum(M, C.free(N.labels))
    return table_mismatch("free product as Higgs lift", inst, C.free_product(M, N), C.higgs_lift(low, high, M.rank()))


def _interval_converse(n_total):
    """For every split S + T of a ground set of ``n_total`` elements and every
    pair (M, N), the matroids K with K|S = M and K/S = N are exactly those with
    M + N <= K <= M [] N.  Returns (pairs examined, witness or None)."""
    tables = catalog.table_stack(n_total)
    E = labels("e", n_total)
    pairs = 0
    for nS in range(1, n_total):
        nT = n_total - nS
        S, T = E[:nS], E[nS:]
        fullS = (1 << nS) - 1
        restr = tables[:, : 1 << nS]
        contr = tables[:, (all_masks(nT) << nS) | fullS] - tables[:, [fullS]]
        for M in catalog.all_matroids(S):
            for N in catalog.all_matroids(T):
                pairs += 1
                lo = C.direct_sum(M, N).table
                hi = C.free_product(M, N).table
                inside = np.all(tables >= lo, axis=1) & np.all(tables <= hi, axis=1)
                semi = np.all(restr == M.table, axis=1) & np.all(contr == N.table, axis=1)
                bad = np.flatnonzero(inside != semi)
                if bad.size:
                    k = int(bad[0])
                    return pairs, {
                        "property": "interval equals semidirect sums",
                        "M": mj(M),
                        "N": mj(N),
                        "K": {"ground": E, "kind": "rank_table", "data": tables[k].tolist()},
                        "in_interval": bool(inside[k]),
                        "semidirect": bool(semi[k]),
                    }
    return pairs, None


@register("weak_interval", count=500, max_n=5)
def _weak_interval(seed, count, max_n):
    """Every generated semidirect sum lies between M + N and the free product;
    on ground sets of at most five elements, every matroid in that interval
    is a semidirect sum (exhaustive)."""
    gen = InstanceGen(sub_seed(seed, "weak_interval"), max_n=max_n)
    for k in range(count):
        K, M, N = _some_semidirect_sum(gen)
        if not (weak_leq(C.direct_sum(M, N), K) and weak_leq(K, C.free_product(M, N))):
            witness = fail("semidirect sum in interval", {"K": mj(K), "M": mj(M), "N": mj(N)}, instance_index=k)
            return CheckReport("weak_interval", "fail", k + 1, seed, witness)
    total = count
    notes = []
    for n_total in range(2, catalog.CATALOG_MAX_N + 1):
        pairs, witness = _interval_converse(n_total)
        total += pairs
        notes.append(f"converse: {pairs} (M, N) pairs on {n_total} elements")
        if witness:
            return CheckReport("weak_interval", "fail", total, seed, witness, notes)
    return CheckReport("weak_interval", "pass", total, seed, None, notes)
