"""Checks for semidirect sums built from matroid unions and intersections."""

from .. import constructions as C
from .._bits import bits_of
from ..core import is_quotient, weak_leq
from .generators import labels
from ._util import fail, mj, table_mismatch
from .registry import instance_check


def semidirect_mismatch(prop, instance, K, M, N):
    """None if ``K | S == M`` and ``K / S == N``, else a witness."""
    S = M.labels
    bad = table_mismatch(prop + ": restriction to S", instance, M, K.restrict(S))
    if bad:
        return bad
    return table_mismatch(prop + ": contraction by S", instance, N, K.contract(S))


@instance_check("semidirect_union")
def _semidirect_union(gen):
    """The union of a rank-preserving extension of M with N plus loops is a
    semidirect sum of M and N."""
    M, N, M_plus = gen.union_data()
    inst = {"M": mj(M), "N": mj(N), "M_plus": mj(M_plus)}
    K = C.union(M_plus, C.add_loops(N, M.labels))
    bad = semidirect_mismatch("semidirect sum", inst, K, M, N)
    if bad:
        return bad
    # the degenerate extension by loops gives the direct sum
    K0 = C.union(C.direct_sum(M, C.loops_on(N.labels)), C.add_loops(N, M.labels))
    return table_mismatch("loops extension gives direct sum", inst, C.direct_sum(M, N), K0)


@instance_check("semidirect_intersection")
def _semidirect_intersection(gen):
    """Intersection of M plus free T with a coextension of N of rank
    r(N) + |S| is a semidirect sum of M and N."""
    S = labels("s", gen.size())
    T = labels("t", gen.size())
    M, N = gen.matroid(S), gen.matroid(T)
    N_co = gen.coextension(N, S)
    M_1 = C.direct_sum(M, C.free(T))
    inst = {"M": mj(M), "N": mj(N), "N_coextension": mj(N_co)}
    K = C.intersection(M_1, N_co)
    return semidirect_mismatch("semidirect sum", inst, K, M, N)


def _some_semidirect_sum(gen):
    """A semidirect sum ``(K, M, N)`` from a randomly chosen route."""
    route = gen.rng.randrange(4)
    if route == 0:
        M, N, M_plus = gen.union_data()
        return C.union(M_plus, C.add_loops(N, M.labels)), M, N
    if route == 1:
        spec = gen.principal_spec()
        return spec.build(), spec.M, spec.N
    if route == 2:
        S = labels("s", gen.size())
        T = labels("t", gen.size())
        M, N = gen.matroid(S), gen.matroid(T)
        K = C.higgs_semidirect(M, gen.quotient_of(M), N, gen.lift_of(N))
        return K, M, N
    # any matroid is a semidirect sum of its restriction and contraction
    S = labels("s", gen.size())
    T = labels("t", gen.size())
    K = gen.matroid(S + T)
    return K, K.restrict(S), K.contract(S)


@instance_check("rank_additivity_and_dual")
def _rank_additivity_and_dual(gen):
    """A semidirect sum has rank r(M) + r(N), and its dual is a semidirect sum
    of N* and M*."""
    K, M, N = _some_semidirect_sum(gen)
    inst = {"K": mj(K), "M": mj(M), "N": mj(N)}
    if K.rank() != M.rank() + N.rank():
        return fail("rank additivity", inst, expected=M.rank() + N.rank(), got=K.rank())
    Kd = K.dual().reorder(N.labels + M.labels)
    return semidirect_mismatch("dual", inst, Kd, N.dual(), M.dual())


@instance_check("union_quotients")
def _union_quotients(gen):
    """G and H are quotients of their union; flats of G, of H, and their
    intersections are union flats; union circuits and cyclic sets are cyclic
    in both G and H."""
    E = labels("e", gen.size(1, min(2 * gen.max_n, 8)))
    G, H = gen.matroid(E), gen.matroid(E)
    K = C.union(G, H)
    inst = {"G": mj(G), "H": mj(H)}
    for name, part in (("G", G), ("H", H)):
        if not is_quotient(part, K):
            return fail(f"{name} is a quotient of the union", inst)
    flat_K = K.flat_array()
    for U in G.flats():
        for V in H.flats():
            for F in (U, V, U & V):
                if not flat_K[F]:
                    return fail("flat of the union", inst, subset=K.ground.labels_of(F))
    cyc_G, cyc_H = G.cyclic_array(), H.cyclic_array()
    for X in K.cyclic_sets():
        if not (cyc_G[X] and cyc_H[X]):
            return fail("union cyclic set is cyclic in G and H", inst, subset=K.ground.labels_of(X))
    # the converse fails: U_{r,n} and U_{n-r,n} share cyclic sets, but their union is free
    n = len(E)
    r = gen.rng.randint(0, n)
    free = C.union(C.uniform(r, E), C.uniform(n - r, E))
    return table_mismatch("complementary uniforms unite to free", {"n": n, "r": r}, C.free(E), free)


@instance_check("union_minors")
def _union_minors(gen):
    """Deletion distributes over union; so does contraction of elements that
    are loops of G or of H."""
    E = labels("e", gen.size(1, min(2 * gen.max_n, 8)))
    G, H = gen.matroid(E), gen.matroid(E)
    K = C.union(G, H)
    X = gen.subset(K.full)
    inst = {"G": mj(G), "H": mj(H), "X": K.ground.labels_of(X)}
    bad = table_mismatch("deletion", inst, C.union(G.delete(X), H.delete(X)), K.delete(X))
    if bad:
        return bad
    Y = gen.subset(G.loops() | H.loops())
    inst = dict(inst, X=K.ground.labels_of(Y))
    return table_mismatch("contraction of loops", inst, C.union(G.contract(Y), H.contract(Y)), K.contract(Y))


@instance_check("union_weak_monotone")
def _union_weak_monotone(gen):
    """Union is monotone in the weak order, and a union sandwiched between two
    equal unions equals them."""
    E = labels("e", gen.size(1, min(2 * gen.max_n, 8)))
    G2, H2 = gen.matroid(E), gen.matroid(E)
    G, H = gen.quotient_of(G2), gen.quotient_of(H2)
    G1, H1 = gen.quotient_of(G), gen.quotient_of(H)
    inst = {"G1": mj(G1), "G": mj(G), "G2": mj(G2), "H1": mj(H1), "H": mj(H), "H2": mj(H2)}
    low, mid, high = C.union(G1, H1), C.union(G, H), C.union(G2, H2)
    if not (weak_leq(low, mid) and weak_leq(mid, high)):
        return fail("monotone", inst)
    if low == high and mid != high:
        return table_mismatch("sandwich", inst, high, mid)
    # a sandwich with equal ends, from principal extensions on one flat
    spec = gen.principal_spec()
    M, N = spec.M, spec.N
    Nd = N.dual()
    clB = Nd.closure(spec.B)
    B0 = _basis_inside(gen, Nd, clB)
    lo = C.extension_on_flat(M, spec.A, N.ground.labels_of(B0), N.labels)
    hi = C.extension_on_flat(M, spec.A, N.ground.labels_of(clB), N.labels)
    mid = sandwiched_extension(gen, M, N, spec.A, B0, clB)
    N0 = C.add_loops(N, M.labels)
    inst = {"M": mj(M), "N": mj(N), "M_plus": mj(mid)}
    if not (weak_leq(lo, mid) and weak_leq(mid, hi)):
        return fail("sandwiched extension lies between the ends", inst)
    if C.union(lo, N0) != C.union(hi, N0):
        return table_mismatch("ends have equal unions", inst, C.union(hi, N0), C.union(lo, N0))
    return table_mismatch("sandwich", inst, C.union(hi, N0), C.union(mid, N0))


def _basis_inside(gen, M, X):
    """A random basis of ``M | X``, as a mask."""
    bases = M.restrict(M.ground.labels_of(X)).bases()
    sub = gen.rng.choice(bases)
    small = M.restrict(M.ground.labels_of(X)).ground
    return small.transfer(sub, M.ground)


def sandwiched_extension(gen, M, N, A, B0, clB):
    """An extension of ``M`` to S then T between ``M+(A, B0)`` and ``M+(A, clB)``.

    ``B0`` goes freely on ``cl(A)``; the rest of ``clB`` goes freely on random
    subsets of the current closure of ``A``; the rest of ``T`` are loops.
    """
    K = M
    A = M.mask(A)
    for i, t in enumerate(N.labels):
        bit = 1 << i
        if B0 & bit:
            on = A
        elif clB & bit:
            on = gen.subset(K.closure(A))
        else:
            on = 0
        K = C.principal_extension(K, on, t)
    return K


@instance_check("IBC_circuits")
def _ibc_circuits(gen):
    """For a circuit C of N and I independent in M: I + C is independent in the
    union iff I + a is independent in M_plus for some a in C; it is a circuit
    iff I = I(B, C) for a basis B of M."""
    M, N, M_plus = gen.union_data(max_n=min(gen.max_n, 4))
    K = C.union(M_plus, C.add_loops(N, M.labels))
    inst = {"M": mj(M), "N": mj(N), "M_plus": mj(M_plus)}
    nS = M.size
    indep_plus = M_plus.independent_array()
    indep_K = K.independent_array()
    circ_K = K.circuit_array()
    bases = M.bases()
    for Cn in N.circuits():
        Ct = Cn << nS
        ibc = set()
        for B in bases:
            out = 0
            for a in bits_of(Ct):
                out |= M_plus.fundamental_circuit(B, 1 << a) & ~(1 << a)
            ibc.add(out)
        for I in M.independent_sets():
            pred = any(indep_plus[I | (1 << a)] for a in bits_of(Ct))
            if bool(indep_K[I | Ct]) != pred:
                return fail("independence", inst, subset=K.ground.labels_of(I | Ct), expected=pred)
            if bool(circ_K[I | Ct]) != (I in ibc):
                return fail("circuit", inst, subset=K.ground.labels_of(I | Ct), expected=I in ibc)
    return None

