"""Exhaustive confirmations of the negative examples, plus the named fixtures.

Each "is not" claim is checked by enumerating the whole finite space of
candidates; ``instances_run`` counts the candidates examined.
"""

from itertools import product

from .. import constructions as C
from ..core import is_quotient
from ..linearalg import column_matroid, generic_union
from ..report import CheckReport
from ..transversal import is_fundamental_transversal, is_transversal
from . import catalog, fixtures as F
from .checks_union import semidirect_mismatch
from ._util import fail, family, mj, spec_json, table_mismatch
from .registry import register


def _nonspanning_circuits(M):
    r = M.rank()
    return sorted(sorted(c) for c in family(M.ground, [X for X in M.circuits() if M.rank(X) < r]))


def _rank_one_extensions(M, new_labels):
    """Every rank-preserving extension of a rank-1 matroid ``M`` without
    loops: each new element is a loop or parallel to the rest."""
    for choice in product((0, M.full), repeat=len(new_labels)):
        K = M
        for t, on in zip(new_labels, choice):
            K = C.principal_extension(K, on, t)
        yield K


def _dual_union(tally):
    """The dual of the U_{3,4}/U_{1,2} union is not a union of (M*)_0 with
    any rank-preserving extension of N*."""
    M, N, M_plus = F.union_example()
    K = C.union(M_plus, C.add_loops(N, M.labels))
    Kd = K.dual().reorder(N.labels + M.labels)
    M0 = C.add_loops(M.dual(), N.labels)
    for ext in _rank_one_extensions(N.dual(), M.labels):
        tally[0] += 1
        if C.union(ext, M0) == Kd:
            return fail("dual is not such a union", {"M": mj(M), "N": mj(N)}, extension=mj(ext))
    return None


def _three_lines_deletion(tally):
    """P minus x is a semidirect sum of M minus x and N, but no principal sum."""
    spec = F.three_lines_spec()
    P = spec.build()
    bad = table_mismatch("parallel connection of three lines", spec_json(spec), F.three_lines(), P)
    if bad:
        return bad
    Md = spec.M.delete("x")
    Pd = P.delete("x")
    inst = {"P_minus_x": mj(Pd), "M_minus_x": mj(Md), "N": mj(spec.N)}
    bad = semidirect_mismatch("deletion is a semidirect sum", inst, Pd, Md, spec.N)
    if bad:
        return bad
    for A in range(1 << Md.size):
        for B in range(1 << spec.N.size):
            tally[0] += 1
            if C.principal_sum(Md, spec.N, A, B) == Pd:
                return fail(
                    "deletion is not a principal sum",
                    inst,
                    A=Md.ground.labels_of(A),
                    B=spec.N.ground.labels_of(B),
                )
    return None


def _whirl_not_higgs(tally):
    """No quotient of U_{2,3} and lift of U_{1,3} yield the whirl as a Higgs lift."""
    M, N, M_plus, N_0 = F.whirl_parts()
    K = C.union(M_plus, N_0)
    bad = table_mismatch("whirl as a union", {"M_plus": mj(M_plus), "N_0": mj(N_0)}, F.whirl(), K)
    if bad:
        return bad
    bad = semidirect_mismatch("whirl is a semidirect sum", {"K": mj(K)}, K, M, N)
    if bad:
        return bad
    quotients = [Q for Q in catalog.all_matroids(M.labels) if is_quotient(Q, M)]
    lifts = [L for L in catalog.all_matroids(N.labels) if is_quotient(N, L)]
    for M_q in quotients:
        for N_l in lifts:
            tally[0] += 1
            if C.higgs_semidirect(M, M_q, N, N_l) == K:
                return fail("whirl is not a Higgs semidirect sum", {"K": mj(K)}, M_q=mj(M_q), N_l=mj(N_l))
    return None


def _free_extension_not_union(tally):
    """The free extension of three parallel pairs is a semidirect sum of a
    rank-1 point and the truncated pairs, is a first Higgs lift, and is not
    the union of any rank-preserving extension of the point with N_0; the
    only such union keeping the three pairs parallel is the direct sum."""
    K = F.three_pairs_free_extension()
    M = K.restrict(["x"])
    N = F.three_pairs_truncated()
    inst = {"K": mj(K)}
    bad = semidirect_mismatch("free extension is a semidirect sum", inst, K, M, N)
    if bad:
        return bad
    H = C.higgs_semidirect(M, C.loops_on(["x"]), N, F.three_pairs())
    bad = table_mismatch("first Higgs lift", inst, K, H)
    if bad:
        return bad
    N0 = C.add_loops(N, M.labels)
    for ext in _rank_one_extensions(M, N.labels):
        tally[0] += 1
        U = C.union(ext, N0)
        if U == K:
            return fail("free extension is not such a union", inst, extension=mj(ext))
        pairs_parallel = all(U.rank(list(F.PAIRS[k : k + 2])) == 1 for k in range(0, 6, 2))
        if pairs_parallel and U != C.direct_sum(M, N):
            return table_mismatch("a union keeping the pairs is the direct sum", inst, C.direct_sum(M, N), U)
    return None


def _transversal_examples(tally):
    """Hypotheses of the transversal transfer results cannot be dropped."""
    T3 = F.three_pairs_truncated()
    if is_transversal(T3).passed:
        return fail("truncated pairs are not transversal", {"K": mj(T3)})
    partner = dict(zip(F.PAIRS[::2], F.PAIRS[1::2]))
    partner.update({v: k for k, v in partner.items()})
    for e in F.PAIRS:
        tally[0] += 1
        M = T3.delete(e)
        N = C.loops_on([e])
        spec = C.PrincipalSumSpec(M, N, [partner[e]], [e])
        bad = table_mismatch("truncation as a principal sum", spec_json(spec), T3.reorder(M.labels + (e,)), spec.build())
        if bad:
            return bad
        if not (is_transversal(M).passed and is_transversal(N).passed):
            return fail("parts are transversal", spec_json(spec))
        if spec.A in M.cyclic_flats():
            return fail("A is not a cyclic flat", spec_json(spec))
    spec = F.nonfundamental_sum_spec()
    tally[0] += 1
    M, N = spec.M, spec.N
    if not (is_fundamental_transversal(M).passed and is_fundamental_transversal(N).passed):
        return fail("parts are fundamental transversal", spec_json(spec))
    if spec.A not in M.cyclic_flats() or spec.B in N.dual().cyclic_flats():
        return fail("A cyclic flat, B not a cyclic flat of the dual", spec_json(spec))
    P = spec.build()
    if not is_transversal(P).passed or is_fundamental_transversal(P).passed:
        return fail("sum is transversal but not fundamental", spec_json(spec))
    K = F.three_pairs_free_extension()
    tally[0] += 1
    if not is_fundamental_transversal(K).passed:
        return fail("free extension is fundamental transversal", {"K": mj(K)})
    if is_transversal(K.contract("x")).passed:
        return fail("contraction by x is not transversal", {"K": mj(K)})
    return None


def _union_contraction(tally):
    """Contraction of a non-loop does not distribute over union."""
    G, H = F.u24_pair()
    tally[0] += 1
    e = G.labels[0]
    lhs = C.union(G, H).contract(e)
    rhs = C.union(G.contract(e), H.contract(e))
    if lhs == rhs:
        return fail("contraction does not distribute", {"G": mj(G), "H": mj(H), "X": [e]})
    return None


@register("counterexamples", count=1, max_n=5)
def _counterexamples(seed, count, max_n):
    """The negative examples hold, each by exhaustive search: the dual of a
    union that is no union of the dual kind, a deletion that is no principal
    sum, the whirl that is no Higgs semidirect sum, the free extension that is
    no union, the transversal examples, and a union where contraction fails
    to distribute."""
    tally = [0]
    parts = (
        _dual_union,
        _three_lines_deletion,
        _whirl_not_higgs,
        _free_extension_not_union,
        _transversal_examples,
        _union_contraction,
    )
    for part in parts:
        witness = part(tally)
        if witness is not None:
            return CheckReport("counterexamples", "fail", tally[0], seed, witness)
    return CheckReport("counterexamples", "pass", tally[0], seed)


@register("fixtures", count=1, max_n=5)
def _fixtures(seed, count, max_n):
    """Named examples reproduce: the five-point flats and its union and matrix
    forms, the union example's non-spanning circuits and those of its dual,
    and the whirl from its matrices."""
    checks = 0

    def done(witness):
        return CheckReport("fixtures", "fail", checks, seed, witness)

    M = F.five_point()
    checks += 1
    flats = family(M.ground, M.flats())
    if flats != sorted(F.FIVE_POINT_FLATS):
        return done(fail("five-point flats", {"M": mj(M)}, expected=sorted(F.FIVE_POINT_FLATS), got=flats))
    G, H = F.five_point_parts()
    for name, K in (("union", C.union(G, H)), ("matrix", column_matroid(F.five_point_matrix()))):
        checks += 1
        bad = table_mismatch(f"five-point {name}", {"M": mj(M)}, M, K)
        if bad:
            return done(bad)
    K = F.union_example_sum()
    Kd = K.dual()
    for name, X, expected in (
        ("union", K, F.UNION_NONSPANNING_CIRCUITS),
        ("dual of union", Kd, F.UNION_DUAL_NONSPANNING_CIRCUITS),
    ):
        checks += 1
        got = _nonspanning_circuits(X)
        if got != sorted(sorted(c) for c in expected):
            return done(fail(f"{name} non-spanning circuits", {"K": mj(X)}, expected=expected, got=got))
    MatG, MatH = F.whirl_matrices()
    checks += 1
    bad = table_mismatch("whirl by generic union", {}, F.whirl(), generic_union(MatG, MatH, seed=0))
    if bad:
        return done(bad)
    return CheckReport("fixtures", "pass", checks, seed)
