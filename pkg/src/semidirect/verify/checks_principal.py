"""Checks for principal sums: rank, independence, duality, minors, flats,
cyclic flats, circuits, cyclic sets, connectivity and equality."""

import numpy as np

from .. import constructions as C
from .._bits import all_masks, bits_of, popcounts, spread, submasks
from ..core import classify_region, region_table, weak_leq
from .checks_union import _basis_inside, sandwiched_extension
from .generators import labels
from ._util import (
    array_mismatch,
    fail,
    flat_within,
    mj,
    no_coloops_outside,
    spec_json,
    split_masks,
    table_mismatch,
)
from .registry import instance_check


def _parts(spec):
    """Per-mask arrays of the S and T parts of every S-then-T mask."""
    return split_masks(spec.M.size, spec.N.size)


@instance_check("principal_rank")
def _principal_rank(gen):
    """The closed-form rank agrees with the union route and the Higgs route;
    the extension on a flat does not depend on the order of B; the rank is the
    direct-sum rank when A is inside X or Y misses B; and the sum grows
    weakly with A and B."""
    spec = gen.principal_spec()
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    inst = spec_json(spec)
    P = spec.build()
    bad = table_mismatch("union route", inst, P, C.principal_sum_by_union(M, N, A, B))
    bad = bad or table_mismatch("Higgs route", inst, P, C.principal_sum_by_higgs(M, N, A, B))
    if bad:
        return bad
    # iterated single-element extensions, in a random order of B
    B_labels = N.ground.labels_of(B)
    gen.rng.shuffle(B_labels)
    K = M
    for b in B_labels:
        K = C.principal_extension(K, A, b)
    K = C.direct_sum(K, C.loops_on([t for t in N.labels if t not in B_labels])).reorder(M.labels + N.labels)
    bad = table_mismatch("extension on a flat", inst, C.extension_on_flat(M, A, B_labels, N.labels), K)
    if bad:
        return bad
    X, Y = _parts(spec)
    same = ((X & A) == A) | ((Y & B) == 0)
    dsum = C.direct_sum(M, N).table
    bad = np.flatnonzero(same & (P.table != dsum))
    if bad.size:
        Z = int(bad[0])
        return fail("direct-sum rank", inst, subset=P.ground.labels_of(Z), expected=int(dsum[Z]), got=int(P.table[Z]))
    A2 = A | gen.subset(M.full)
    B2 = B | gen.subset(N.full)
    if not weak_leq(P, C.principal_sum(M, N, A2, B2)):
        return fail("weakly monotone in A and B", inst, A2=M.ground.labels_of(A2), B2=N.ground.labels_of(B2))
    return None


def _three_set_independent(spec):
    """Independence from the three-disjoint-sets description, by brute force over D'."""
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    X, Y = _parts(spec)
    slack = M.table[all_masks(M.size) | A] - popcounts(M.size)
    indep_M = M.independent_array()
    indep_N = N.independent_array()
    pc_T = popcounts(N.size)
    ok = np.zeros(X.shape, dtype=bool)
    for Dp in submasks(B):
        ok |= ((Y & Dp) == Dp) & indep_N[Y & ~Dp] & (pc_T[Dp] <= slack[X])
    return ok & indep_M[X]


@instance_check("principal_independents")
def _principal_independents(gen):
    """Independent sets of the principal sum are exactly the unions of
    disjoint I, D, D' with I independent in M, D independent in N, D' inside
    B and |D'| <= r(I + A) - |I|; likewise for the extension on a flat and
    for the free product."""
    spec = gen.principal_spec()
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    inst = spec_json(spec)
    P = spec.build()
    bad = array_mismatch("principal sum", inst, P.ground, _three_set_independent(spec), P.independent_array())
    if bad:
        return bad
    X, Y = _parts(spec)
    slack = M.table[all_masks(M.size) | A] - popcounts(M.size)
    pc_T = popcounts(N.size)
    pred = M.independent_array()[X] & ((Y & ~B) == 0) & (pc_T[Y] <= slack[X])
    ext = C.extension_on_flat(M, A, N.ground.labels_of(B), N.labels)
    bad = array_mismatch("extension on a flat", inst, ext.ground, pred, ext.independent_array())
    if bad:
        return bad
    F = C.free_product(M, N)
    pred = M.independent_array()[X] & (pc_T[Y] - N.table[Y] <= M.rank() - popcounts(M.size)[X])
    return array_mismatch("free product", inst, F.ground, pred, F.independent_array())


@instance_check("region_ideal_filter")
def _region_ideal_filter(gen):
    """R_< and R_<= are filters; R_> and R_>= are ideals."""
    spec = gen.principal_spec()
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    inst = spec_json(spec)
    sign = region_table(M, N, A, B)
    n = M.size + N.size
    masks = all_masks(n)
    tests = (
        ("R_< is a filter", lambda s: s < 0, True),
        ("R_<= is a filter", lambda s: s <= 0, True),
        ("R_> is an ideal", lambda s: s > 0, False),
        ("R_>= is an ideal", lambda s: s >= 0, False),
    )
    for i in range(n):
        bit = 1 << i
        lo = masks[(masks & bit) == 0]
        hi = lo | bit
        for name, member, upward in tests:
            src, dst = (lo, hi) if upward else (hi, lo)
            bad = np.flatnonzero(member(sign[src]) & ~member(sign[dst]))
            if bad.size:
                return fail(name, inst, inside=spec_labels(spec, int(src[bad[0]])), outside=spec_labels(spec, int(dst[bad[0]])))
    # spot-check the single-set classifier against the table
    Z = gen.rng.randrange(1 << n)
    Xm, Ym = Z & M.full, Z >> M.size
    got = classify_region(M, N, A, B, Xm, Ym).value
    if got != int(sign[Z]):
        return fail("classify_region", inst, subset=spec_labels(spec, Z), expected=int(sign[Z]), got=got)
    return None


def spec_labels(spec, Z):
    labs = spec.M.labels + spec.N.labels
    return [labs[i] for i in bits_of(Z)]


def _standard_higgs_pair(M, N, A, B):
    M_q = C.direct_sum(M.contract(A), C.loops_on(M.ground.labels_of(A))).reorder(M.labels)
    N_l = C.direct_sum(N.delete(B), C.free(N.ground.labels_of(B))).reorder(N.labels)
    return C.direct_sum(M_q, N), C.direct_sum(M, N_l)


@instance_check("principal_dual")
def _principal_dual(gen):
    """(M, N; A, B)* = (N*, M*; B, A) after listing T before S, and the dual
    of the i-th Higgs lift of Q toward L is the j-th lift of L* toward Q*
    with i + j = r(L) - r(Q)."""
    spec = gen.principal_spec()
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    inst = spec_json(spec)
    P = spec.build()
    dual = C.principal_sum(N.dual(), M.dual(), B, A)
    bad = table_mismatch("principal dual", inst, dual, P.dual().reorder(N.labels + M.labels))
    if bad:
        return bad
    Q, L = _standard_higgs_pair(M, N, A, B)
    gap = L.rank() - Q.rank()
    for i in sorted({M.rank(A), gen.rng.randint(-1, gap + 1)}):
        H = C.higgs_lift(Q, L, i)
        H_dual = C.higgs_lift(L.dual(), Q.dual(), gap - i)
        bad = table_mismatch(f"Higgs dual, i={i}", inst, H_dual, H.dual())
        if bad:
            return bad
    return None


def _sub_spec_sum(M, N, A, B, delete=0, contract=0):
    """``(M', N'; A - X, B - X)`` on the minors of M and N."""
    nS = M.size
    X = delete | contract
    Ms = M.minor(delete & M.full, contract & M.full)
    Nt = N.minor(delete >> nS, contract >> nS)
    A2 = Ms.mask(M.ground.labels_of(A & ~X))
    B2 = Nt.mask(N.ground.labels_of(B & ~(X >> nS)))
    return C.principal_sum(Ms, Nt, A2, B2)


@instance_check("principal_minors")
def _principal_minors(gen):
    """Deleting a set that avoids a basis of M|A, or contracting one that
    avoids a basis of N*|B, gives the principal sum of the minors."""
    spec = gen.principal_spec()
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    inst = spec_json(spec)
    P = spec.build()
    nS = M.size
    A0 = _basis_inside(gen, M, A)
    X = gen.subset(P.full & ~A0)
    bad = table_mismatch(
        "deletion",
        dict(inst, X=P.ground.labels_of(X)),
        _sub_spec_sum(M, N, A, B, delete=X),
        P.delete(X),
    )
    if bad:
        return bad
    B0 = _basis_inside(gen, N.dual(), B)
    X = gen.subset(P.full & ~(B0 << nS))
    return table_mismatch(
        "contraction",
        dict(inst, X=P.ground.labels_of(X)),
        _sub_spec_sum(M, N, A, B, contract=X),
        P.contract(X),
    )


@instance_check("principal_closure_flats", count=300)
def _principal_closure_flats(gen):
    """Closure of X + Y is cl_M(X + A) + cl_N(Y) on R_<=, and otherwise
    cl_M(X) + cl_{N-B}(Y - B) + (Y & B); the flats are the two families
    built from that."""
    spec = gen.principal_spec()
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    inst = spec_json(spec)
    P = spec.build()
    nS = M.size
    X, Y = _parts(spec)
    sign = region_table(M, N, A, B)
    clM, clN = M.closure_array(), N.closure_array()
    NB = N.delete(B)
    # closure in N - B, re-indexed by masks over T
    rest = N.full & ~B
    cl_NB = np.zeros(1 << N.size, dtype=np.int64)
    small = NB.closure_array()
    keep = bits_of(rest)
    cl_NB[spread(len(keep), keep)] = spread(len(keep), keep)[small]
    first = clM[X | A] | (clN[Y] << nS)
    second = clM[X] | ((cl_NB[Y & ~B] | (Y & B)) << nS)
    pred = np.where(sign <= 0, first, second)
    bad = array_mismatch("closure", inst, P.ground, pred, P.closure_array())
    if bad:
        return bad
    flat_M, flat_N = M.flat_array(), N.flat_array()
    flat_NB = flat_within(N, rest)
    pred = (flat_M[X] & ((X & A) == A) & flat_N[Y]) | (flat_M[X] & flat_NB[Y & ~B] & (sign > 0))
    return array_mismatch("flats", inst, P.ground, pred, P.flat_array())


def _predicted_cyclic_flats(spec):
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    X, Y = _parts(spec)
    cyc_M, cyc_N = M.cyclic_array(), N.cyclic_array()
    flat_M = M.flat_array()
    Z_M = cyc_M & flat_M
    Z_N = cyc_N & N.flat_array()
    Z_NB = cyc_N & flat_within(N, N.full & ~B) & ((all_masks(N.size) & B) == 0)
    contains_A = (X & A) == A
    meets_B = (Y & B) != 0
    one = Z_M[X] & ~contains_A & Z_NB[Y]
    two = flat_M[X] & contains_A & no_coloops_outside(M, A)[X] & Z_N[Y] & meets_B
    three = Z_M[X] & contains_A & Z_N[Y] & ~meets_B
    return one | two | three


def _closure_under(op, masks):
    out = set(masks)
    frontier = list(out)
    while frontier:
        new = []
        for a in frontier:
            for b in list(out):
                c = op(a, b)
                if c not in out:
                    out.add(c)
                    new.append(c)
        frontier = new
    return out


@instance_check("principal_cyclic_flats", count=300)
def _principal_cyclic_flats(gen):
    """The cyclic flats are the three listed families; for A in Z(M) and B in
    Z(N*) they are the Z_M + Z_N with A inside Z_M or Z_N missing B; unions
    and intersections of cyclic flats have direct-sum rank."""
    spec = gen.principal_spec()
    M, N = spec.M, spec.N
    inst = spec_json(spec)
    P = spec.build()
    got = P.cyclic_array() & P.flat_array()
    bad = array_mismatch("cyclic flats", inst, P.ground, _predicted_cyclic_flats(spec), got)
    if bad:
        return bad
    dsum = C.direct_sum(M, N).table
    Z = P.cyclic_flats()
    for op_name, op in (("union", int.__or__), ("intersection", int.__and__)):
        for W in _closure_under(op, Z):
            if P.table[W] != dsum[W]:
                return fail(f"{op_name} of cyclic flats has direct-sum rank", inst, subset=P.ground.labels_of(W))
    # cyclic A and B with cyclic complement in N
    A = gen.rng.choice(M.cyclic_flats())
    B = N.full & ~gen.rng.choice(N.cyclic_flats())
    spec2 = C.PrincipalSumSpec(M, N, A, B)
    P2 = spec2.build()
    X, Y = _parts(spec2)
    Z_M = M.cyclic_array() & M.flat_array()
    Z_N = N.cyclic_array() & N.flat_array()
    pred = Z_M[X] & Z_N[Y] & (((X & A) == A) | ((Y & B) == 0))
    got = P2.cyclic_array() & P2.flat_array()
    return array_mismatch("cyclic flats, cyclic case", spec_json(spec2), P2.ground, pred, got)


@instance_check("principal_circuits", count=300)
def _principal_circuits(gen):
    """Circuits are the circuits of M, the circuits of N avoiding B, and the
    X + Y with X independent, no coloop of M|(X+A) outside A, Y cyclic,
    Y - B independent and |X| + |Y| - 1 = r_M(X + A) + r_N(Y)."""
    spec = gen.principal_spec()
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    P = spec.build()
    X, Y = _parts(spec)
    pcS, pcT = popcounts(M.size), popcounts(N.size)
    circ_M, circ_N = M.circuit_array(), N.circuit_array()
    one = (Y == 0) & circ_M[X]
    two = (X == 0) & circ_N[Y] & ((Y & B) == 0)
    three = (
        M.independent_array()[X]
        & no_coloops_outside(M, A)[X]
        & N.cyclic_array()[Y]
        & N.independent_array()[Y & ~B]
        & (pcS[X] + pcT[Y] - 1 == M.table[X | A] + N.table[Y])
    )
    return array_mismatch("circuits", spec_json(spec), P.ground, one | two | three, P.circuit_array())


@instance_check("principal_cyclic_sets", count=300)
def _principal_cyclic_sets(gen):
    """X + Y is cyclic iff X, Y are cyclic and Y misses B, or M|(X+A) has no
    coloops outside A, Y is cyclic and X + Y lies in R_<."""
    spec = gen.principal_spec()
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    P = spec.build()
    X, Y = _parts(spec)
    cyc_M, cyc_N = M.cyclic_array(), N.cyclic_array()
    sign = region_table(M, N, A, B)
    one = cyc_M[X] & cyc_N[Y] & ((Y & B) == 0)
    two = no_coloops_outside(M, A)[X] & cyc_N[Y] & (sign < 0)
    return array_mismatch("cyclic sets", spec_json(spec), P.ground, one | two, P.cyclic_array())


@instance_check("dirsum_criterion")
def _dirsum_criterion(gen):
    """T is a separator iff the sum is direct iff A is loops of M or B is
    coloops of N."""
    spec = gen.principal_spec()
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    P = spec.build()
    T = P.full & ~M.full
    sep = int(P.table[T] + P.table[M.full]) == P.rank()
    direct = P == C.direct_sum(M, N)
    trivial = (A & ~M.loops()) == 0 or (B & ~N.coloops()) == 0
    if not sep == direct == trivial:
        return fail("equivalence", spec_json(spec), separator=sep, direct=direct, loops_or_coloops=trivial)
    return None


def _has_separator(K, want):
    return any(want(X) for X in K.separators())


@instance_check("connectivity")
def _connectivity(gen):
    """The sum is disconnected iff it is direct, M has loops or N coloops, M
    has a proper separator containing nonempty A, or N has a nonempty
    separator missing nonempty B."""
    spec = gen.principal_spec()
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    P = spec.build()
    c1 = P == C.direct_sum(M, N)
    c2 = M.loops() != 0 or N.coloops() != 0
    c3 = A != 0 and _has_separator(M, lambda X: (X & A) == A and X != M.full)
    c4 = B != 0 and _has_separator(N, lambda Y: Y != 0 and (Y & B) == 0)
    pred = c1 or c2 or c3 or c4
    if (not P.is_connected()) != pred:
        return fail(
            "disconnected iff",
            spec_json(spec),
            disconnected=not P.is_connected(),
            conditions=[c1, c2, c3, c4],
        )
    return None


@instance_check("equality_criterion", count=200, max_n=4)
def _equality_criterion(gen):
    """Equal closures of A in M and of B in N* give equal sums; for a sum that
    is not direct, equal sums force equal closures.  Exhaustive over A', B'."""
    spec = gen.principal_spec()
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    inst = spec_json(spec)
    Nd = N.dual()
    clM, clNd = M.closure_array(), Nd.closure_array()
    base = C.principal_sum_table(M, N, A, B)
    direct = np.array_equal(base, C.direct_sum(M, N).table)
    for A2 in range(M.full + 1):
        for B2 in range(N.full + 1):
            same_cl = clM[A2] == clM[A] and clNd[B2] == clNd[B]
            equal = np.array_equal(base, C.principal_sum_table(M, N, A2, B2))
            if same_cl and not equal:
                return fail("equal closures give equal sums", inst, A2=M.ground.labels_of(A2), B2=N.ground.labels_of(B2))
            if equal and not same_cl and not direct:
                return fail("equal sums force equal closures", inst, A2=M.ground.labels_of(A2), B2=N.ground.labels_of(B2))
    return None


@instance_check("union_freedom")
def _union_freedom(gen):
    """Any extension between M+(A, B0) and M+(A, cl*(B)), with B0 a basis of
    N*|cl*(B), unites with N plus loops to the principal sum."""
    spec = gen.principal_spec()
    M, N, A, B = spec.M, spec.N, spec.A, spec.B
    Nd = N.dual()
    clB = Nd.closure(B)
    B0 = _basis_inside(gen, Nd, clB)
    M_plus = sandwiched_extension(gen, M, N, A, B0, clB)
    inst = dict(spec_json(spec), M_plus=mj(M_plus))
    lo = C.extension_on_flat(M, A, N.ground.labels_of(B0), N.labels)
    hi = C.extension_on_flat(M, A, N.ground.labels_of(clB), N.labels)
    if not (weak_leq(lo, M_plus) and weak_leq(M_plus, hi)):
        return fail("extension is sandwiched", inst)
    K = C.union(M_plus, C.add_loops(N, M.labels))
    return table_mismatch("union equals principal sum", inst, spec.build(), K)


@instance_check("associativity", max_n=4)
def _associativity(gen):
    """((M, N; A, B), K; A + B, C) = (M, (N, K; B, C); A, B + C)."""
    M = gen.matroid(labels("s", gen.size()))
    N = gen.matroid(labels("t", gen.size()))
    K = gen.matroid(labels("u", gen.size()))
    A, B, Cm = gen.choose_A(M), gen.choose_B(N), gen.choose_B(K)
    left_inner = C.principal_sum(M, N, A, B)
    AB = A | (B << M.size)
    left = C.principal_sum(left_inner, K, AB, Cm)
    right_inner = C.principal_sum(N, K, B, Cm)
    right = C.principal_sum(M, right_inner, A, B | (Cm << N.size))
    inst = {
        "M": mj(M),
        "N": mj(N),
        "K": mj(K),
        "A": M.ground.labels_of(A),
        "B": N.ground.labels_of(B),
        "C": K.ground.labels_of(Cm),
    }
    return table_mismatch("associativity", inst, left, right)

