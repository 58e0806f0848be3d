"""Checks on the building blocks: rank axioms and the GF(p) linear layer."""

import numpy as np

from .. import constructions as C
from .._bits import all_masks, popcounts
from ..core import MAX_N, weak_leq
from ..linearalg import (
    MERSENNE_31,
    FpMatrix,
    block_triangular,
    column_matroid,
    contract_by_row_reduction,
    generic_union,
    random_full_row_rank,
    random_matrix,
)
from ..report import CheckReport
from .generators import SOURCES, InstanceGen, labels, sub_seed
from ._util import fail, mj, table_mismatch
from .registry import instance_check, register


def global_axiom_violation(table):
    """Brute-force rank axioms over all pairs of subsets; a description or None.

    Independent of the local test used at construction time: it compares
    every pair ``X, Y`` directly.
    """
    t = np.asarray(table, dtype=np.int64)
    n = t.size.bit_length() - 1
    if t.size != 1 << n:
        return "table length is not a power of two"
    masks = all_masks(n)
    if t[0] != 0:
        return "rank of the empty set"
    if np.any(t < 0) or np.any(t > popcounts(n)):
        return "bounds 0 <= r(X) <= |X|"
    X, Y = masks[:, None], masks[None, :]
    subset = (X & Y) == X
    if np.any(subset & (t[X] > t[Y])):
        return "monotonicity"
    if np.any(t[X] + t[Y] < t[X | Y] + t[X & Y]):
        return "submodularity"
    return None


def _derived(gen, M):
    """One matroid from a construction applied to ``M`` and fresh inputs."""
    kind = gen.rng.randrange(5)
    if kind == 0:
        return C.union(M, gen.matroid(M.labels))
    if kind == 1:
        return C.truncation(M, gen.rng.randint(0, M.rank()))
    if kind == 2 and M.size < MAX_N:
        return C.principal_extension(M, gen.subset(M.full), "_new")
    if kind == 3:
        return C.higgs_lift(gen.quotient_of(M), M, gen.rng.randint(0, M.rank()))
    spec = gen.principal_spec(max_n=3)
    return spec.build()


@register("axioms", count=2000, max_n=6)
def _axioms(seed, count, max_n):
    """Every generated matroid, from each source in turn, and one matroid
    derived from it by a construction, satisfies the rank axioms by a
    brute-force test over all pairs of subsets."""
    gen = InstanceGen(sub_seed(seed, "axioms"), max_n=max_n)
    for k in range(count):
        source = SOURCES[k % len(SOURCES)]
        M = gen.matroid(labels("e", gen.size(0, max_n)), source)
        for name, K in ((source, M), ("derived", _derived(gen, M))):
            why = global_axiom_violation(K.table)
            if why:
                witness = fail(why, {"M": mj(K)}, source=name, instance_index=k)
                return CheckReport("axioms", "fail", k + 1, seed, witness)
    return CheckReport("axioms", "pass", count, seed)


@instance_check("linear_block", count=200, max_n=5)
def _linear_block(gen):
    """A block upper-triangular matrix over GF(2^31 - 1) with a full-row-rank
    top-left block has K|S = M[A] and K/S = M[B]; row reduction gives the
    contraction by any column set."""
    p = MERSENNE_31
    rng = gen.rng
    S, T = labels("s", gen.size()), labels("t", gen.size())
    A = random_full_row_rank(rng, p, rng.randint(0, len(S)), S)
    B = random_matrix(rng, p, rng.randint(0, len(T) + 1), T, density=rng.choice((0.5, 1.0)))
    U = random_matrix(rng, p, A.rows, T, density=rng.choice((0.0, 0.5, 1.0)))
    D = block_triangular(A, B, U.entries)
    K = column_matroid(D)
    M, N = column_matroid(A), column_matroid(B)
    inst = {"A": A.entries.tolist(), "B": B.entries.tolist(), "U": U.entries.tolist(), "p": p}
    bad = table_mismatch("restriction to S", inst, M, K.minor(delete=T))
    if bad:
        return bad
    bad = table_mismatch("contraction by S", inst, N, K.minor(contract=S))
    if bad:
        return bad
    E1 = gen.subset(K.full)
    got = column_matroid(contract_by_row_reduction(D, E1))
    return table_mismatch("contraction by row reduction", dict(inst, E1=K.ground.labels_of(E1)), K.contract(E1), got)


GENERIC_TRIALS = 1000
GENERIC_MIN_AGREEMENT = 0.99


def _small_entry_matrix(rng, rows, labs):
    """A sparse matrix with entries in {0, 1, 2}, so unions are not all free."""
    entries = [[rng.choice((0, 0, 1, 1, 2)) for _ in labs] for _ in range(rows)]
    return FpMatrix(MERSENNE_31, np.array(entries, dtype=object).reshape(rows, len(labs)), labs)


@register("linear_generic_union", count=GENERIC_TRIALS, max_n=7)
def _linear_generic_union(seed, count, max_n):
    """The random-scalar column model of a union agrees with the union of the
    column matroids on at least 99% of trials and is never freer."""
    gen = InstanceGen(sub_seed(seed, "linear_generic_union"), max_n=max_n)
    rng = gen.rng
    agree = 0
    for k in range(count):
        labs = labels("e", gen.size(1, max_n))
        G = _small_entry_matrix(rng, rng.randint(0, 3), labs)
        H = _small_entry_matrix(rng, rng.randint(0, 3), labs)
        oracle = C.union(column_matroid(G), column_matroid(H))
        got = generic_union(G, H, seed=rng.randrange(2**32))
        if not weak_leq(got, oracle):
            witness = fail(
                "never freer than the union",
                {"G": G.entries.tolist(), "H": H.entries.tolist(), "ground": labs},
                oracle=mj(oracle),
                got=mj(got),
                instance_index=k,
            )
            return CheckReport("linear_generic_union", "fail", k + 1, seed, witness)
        agree += got == oracle
    notes = [f"agreement {agree}/{count}"]
    if count and agree < GENERIC_MIN_AGREEMENT * count:
        witness = fail("agreement rate", {"trials": count}, agree=agree, required=GENERIC_MIN_AGREEMENT)
        return CheckReport("linear_generic_union", "fail", count, seed, witness, notes)
    return CheckReport("linear_generic_union", "pass", count, seed, None, notes)
