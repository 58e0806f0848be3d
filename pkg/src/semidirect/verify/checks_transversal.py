"""Checks for transversal and fundamental transversal matroids."""

from .. import constructions as C
from ..exceptions import CyclicFlatCapExceeded, SearchBudgetExceeded
from ..transversal import (
    has_fundamental_presentation,
    is_fundamental_transversal,
    is_transversal,
    presentation_search,
    transversal_matroid,
)
from .generators import labels
from ._util import fail, mj, spec_json
from .registry import instance_check


def _verdicts(M):
    """``(transversal, fundamental)`` or None when too many cyclic flats."""
    try:
        return is_transversal(M).passed, is_fundamental_transversal(M).passed
    except CyclicFlatCapExceeded:
        return None


def _retry(gen, draw, tries=50):
    """Call ``draw()`` until it returns something other than None."""
    for _ in range(tries):
        out = draw()
        if out is not None:
            return out
    raise RuntimeError("no instance within the cyclic-flat cap")


def _transversal_spec(gen, fundamental):
    S, T = labels("s", gen.size()), labels("t", gen.size())
    M = gen.transversal(S, fundamental=fundamental)
    N = gen.transversal(T, fundamental=fundamental)
    A = gen.rng.choice(M.cyclic_flats())
    if fundamental:
        B = N.full & ~gen.rng.choice(N.cyclic_flats())
    else:
        B = gen.subset(N.full)
    return C.PrincipalSumSpec(M, N, A, B)


@instance_check("transversal_transfer", count=200, max_n=4)
def _transversal_transfer(gen):
    """Principal sums with A cyclic in M keep transversality; with B also a
    cyclic flat of N* they keep fundamental transversality; a transversal
    (fundamental) union M_plus v N_0 has transversal (fundamental) M and N."""

    def part_one():
        spec = _transversal_spec(gen, fundamental=False)
        v = _verdicts(spec.build())
        return None if v is None else (spec, v)

    spec, (trans, _) = _retry(gen, part_one)
    if not trans:
        return fail("part 1: transversal", spec_json(spec))

    def part_two():
        spec = _transversal_spec(gen, fundamental=True)
        v = _verdicts(spec.build())
        return None if v is None else (spec, v)

    spec, (_, fund) = _retry(gen, part_two)
    if not fund:
        return fail("part 2: fundamental transversal", spec_json(spec))

    def parts_three_four():
        if gen.rng.random() < 0.5:
            M, N, M_plus = gen.union_data()
        else:
            # transversal inputs make the premise hold more often
            S, T = labels("s", gen.size()), labels("t", gen.size())
            M = gen.transversal(S, fundamental=gen.rng.random() < 0.5)
            N = gen.transversal(T, fundamental=gen.rng.random() < 0.5)
            M_plus = gen.rank_preserving_extension(M, T)
        K = C.union(M_plus, C.add_loops(N, M.labels))
        vs = [_verdicts(X) for X in (K, M, N)]
        return None if None in vs else (M, N, M_plus, vs)

    M, N, M_plus, (vK, vM, vN) = _retry(gen, parts_three_four)
    inst = {"M": mj(M), "N": mj(N), "M_plus": mj(M_plus)}
    if vK[0] and not (vM[0] and vN[0]):
        return fail("part 3: transversal union has transversal parts", inst, M=vM[0], N=vN[0])
    if vK[1] and not (vM[1] and vN[1]):
        return fail("part 4: fundamental union has fundamental parts", inst, M=vM[1], N=vN[1])
    return None


@instance_check("transversal_oracles", count=300, max_n=7)
def _transversal_oracles(gen):
    """The Mason-Ingleton verdicts agree with a direct presentation search on
    matroids from random set systems and on their duals and minors, whenever
    both fit their budgets."""
    E = labels("e", gen.size(1, gen.max_n))
    system = gen.set_system(E, r=gen.rng.randint(0, len(E)), fundamental=gen.rng.random() < 0.3)
    M = transversal_matroid(system)
    inst = {"system": system.label_sets(), "ground": E}
    v = _verdicts(M)
    if v is not None and not v[0]:
        return fail("transversal matroid passes the test", inst)
    if has_fundamental_presentation(system) and v is not None and not v[1]:
        return fail("fundamental presentation passes equality", inst)
    X = gen.subset(M.full)
    Y = gen.subset(M.full & ~X)
    for name, K in (("matroid", M), ("dual", M.dual()), ("minor", M.minor(X, Y))):
        v = _verdicts(K)
        if v is None:
            continue
        try:
            found = presentation_search(K)
            found_fund = presentation_search(K, fundamental=True)
        except SearchBudgetExceeded:
            continue
        if v[0] != (found is not None):
            return fail(f"{name}: Mason-Ingleton vs search", dict(inst, K=mj(K)), mason_ingleton=v[0], search=found is not None)
        for system in (found, found_fund):
            if system is not None and transversal_matroid(system) != K:
                return fail(f"{name}: found presentation", dict(inst, K=mj(K)), presentation=system.label_sets())
        if found_fund is not None and not has_fundamental_presentation(found_fund):
            return fail(f"{name}: private elements", dict(inst, K=mj(K)), presentation=found_fund.label_sets())
        if v[1] != (found_fund is not None):
            return fail(
                f"{name}: equality vs fundamental search",
                dict(inst, K=mj(K)),
                mason_ingleton=v[1],
                search=found_fund is not None,
            )
    return None


@instance_check("transversal_facts", count=200, max_n=6)
def _transversal_facts(gen):
    """Loops and coloops do not change either verdict; restrictions of
    transversal matroids are transversal; contracting a cyclic set keeps both
    properties; duals and direct sums of fundamental ones are fundamental."""
    E = labels("e", gen.size(1, gen.max_n))
    if gen.rng.random() < 0.7:
        M = gen.transversal(E, fundamental=gen.rng.random() < 0.5)
    else:
        M = gen.matroid(E)
    v = _verdicts(M)
    if v is None:
        return None
    inst = {"M": mj(M)}
    for name, K in (("loop", C.direct_sum(M, C.loops_on(["z"]))), ("coloop", C.direct_sum(M, C.free(["z"])))):
        w = _verdicts(K)
        if w is not None and w != v:
            return fail(f"adding a {name}", inst, before=list(v), after=list(w))
    strip = M.loops() | M.coloops()
    w = _verdicts(M.delete(strip))
    if w is not None and w != v:
        return fail("removing loops and coloops", inst, before=list(v), after=list(w))
    X = gen.subset(M.full)
    if v[0]:
        w = _verdicts(M.restrict(M.ground.labels_of(X)))
        if w is not None and not w[0]:
            return fail("restriction", inst, subset=M.ground.labels_of(X))
    Z = gen.rng.choice(M.cyclic_sets())
    w = _verdicts(M.contract(Z))
    if w is not None and ((v[0] and not w[0]) or (v[1] and not w[1])):
        return fail("contraction of a cyclic set", inst, subset=M.ground.labels_of(Z), before=list(v), after=list(w))
    if v[1]:
        w = _verdicts(M.dual())
        if w is not None and not w[1]:
            return fail("dual of fundamental", inst)
        other = gen.transversal(labels("f", gen.size(1, 3)), fundamental=True)
        w = _verdicts(C.direct_sum(M, other))
        if w is not None and not w[1]:
            return fail("direct sum of fundamentals", dict(inst, other=mj(other)))
    U = C.uniform(gen.rng.randint(0, len(E)), E)
    if _verdicts(U) != (True, True):
        return fail("uniform matroids are fundamental transversal", {"U": mj(U)})
    return None

