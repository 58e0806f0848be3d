import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from semidirect import constructions as C
from semidirect.exceptions import DimensionMismatch, GroundSetMismatch, ModulusTooSmall, NonPrimeModulus
from semidirect.linearalg import (
    MERSENNE_31,
    FpMatrix,
    block_triangular,
    column_matroid,
    contract_by_row_reduction,
    generic_union,
    identity,
    is_prime,
    matrix_rank,
    random_full_row_rank,
    random_matrix,
    stack,
)
from semidirect.verify import fixtures as F
from semidirect.verify.generators import labels


@st.composite
def small_matrices(draw, max_rows=4, max_cols=6, primes=(2, 3, 5, 7)):
    p = draw(st.sampled_from(primes))
    rows = draw(st.integers(0, max_rows))
    cols = draw(st.integers(0, max_cols))
    entries = draw(
        st.lists(st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows)
    )
    return FpMatrix(p, np.array(entries, dtype=object).reshape(rows, cols), labels("e", cols))


@given(small_matrices())
def test_column_matroid_matches_elimination(D):
    M = column_matroid(D)
    entries = [[int(v) for v in row] for row in D.entries]
    assert M.table.tolist() == oracles.column_rank_table(entries, D.p, D.cols)
    assert matrix_rank(D) == M.rank()


def test_matrix_basics():
    assert is_prime(MERSENNE_31) and not is_prime(1) and not is_prime(91)
    with pytest.raises(NonPrimeModulus):
        FpMatrix(4, [[1]], ["a"])
    with pytest.raises(DimensionMismatch):
        FpMatrix(5, [[1, 2]], ["a"])
    D = FpMatrix(5, [[7, -1]], ["a", "b"])
    assert D.column(0) == [2] and D.column(1) == [4]
    assert D == FpMatrix(5, [[2, 4]], ["a", "b"])
    empty = FpMatrix(3, [], [])
    assert column_matroid(empty).size == 0


def test_identity_zero_column_and_five_point():
    assert column_matroid(identity(3, "abcd")) == C.free("abcd")
    D = FpMatrix(3, [[1, 0, 1], [0, 0, 1]], ["a", "b", "c"])
    assert column_matroid(D).loops() == 0b010
    assert column_matroid(F.five_point_matrix()) == F.five_point()
    assert column_matroid(F.five_point_matrix(p=7, x=(2, 3, 5))) == F.five_point()


def _draw_pair(rng, p, nS, nT):
    A = random_matrix(rng, p, rng.randint(0, 3), labels("s", nS), density=0.7)
    B = random_matrix(rng, p, rng.randint(0, 3), labels("t", nT), density=0.7)
    return A, B


@given(st.integers(0, 2**32 - 1))
def test_block_triangular_restriction_and_contraction(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3, 5])
    nS, nT = rng.randint(0, 3), rng.randint(0, 3)
    # K/S is the column matroid of B only when A has full row rank
    A = random_full_row_rank(rng, p, rng.randint(0, nS), labels("s", nS))
    B = random_matrix(rng, p, rng.randint(0, 3), labels("t", nT), density=0.7)
    U = [[rng.randrange(p) for _ in range(nT)] for _ in range(A.rows)]
    K = column_matroid(block_triangular(A, B, U))
    S = list(A.labels)
    assert K.restrict(S) == column_matroid(A)
    assert K.contract(S) == column_matroid(B)


def test_block_triangular_zero_corner_is_direct_sum():
    rng = random.Random(3)
    A, B = _draw_pair(rng, 5, 3, 2)
    K = column_matroid(block_triangular(A, B, []))
    assert K == C.direct_sum(column_matroid(A), column_matroid(B))
    with pytest.raises(DimensionMismatch):
        block_triangular(A, B, [[1]] * (A.rows + 1))
    with pytest.raises(DimensionMismatch):
        block_triangular(A, FpMatrix(7, [[1]], ["t0"]), [])
    with pytest.raises(DimensionMismatch):
        block_triangular(A, A, [])
    empty_B = FpMatrix(5, np.zeros((0, 1), dtype=object), ["t0"])
    assert column_matroid(block_triangular(A, empty_B, [])).loops() == 1 << 3


@given(small_matrices(max_cols=5), st.data())
def test_contract_by_row_reduction(D, data):
    E1 = data.draw(st.integers(0, (1 << D.cols) - 1))
    chosen = D.ground.labels_of(E1)
    lower = contract_by_row_reduction(D, chosen)
    assert column_matroid(lower) == column_matroid(D).contract(chosen)


def test_generic_union_guards():
    G = FpMatrix(5, [[1, 1]], ["a", "b"])
    with pytest.raises(ModulusTooSmall):
        generic_union(G, G)
    G = FpMatrix(MERSENNE_31, [[1, 1]], ["a", "b"])
    with pytest.raises(GroundSetMismatch):
        generic_union(G, FpMatrix(MERSENNE_31, [[1, 1]], ["a", "c"]))
    with pytest.raises(DimensionMismatch):
        stack(G, FpMatrix(5, [[1, 1]], ["a", "b"]))


def test_generic_union_examples():
    p = MERSENNE_31
    E = labels("e", 5)
    rng = random.Random(11)
    G = random_matrix(rng, p, 2, E)
    zero = FpMatrix(p, [[0] * 5], E)
    assert generic_union(G, zero) == column_matroid(G)
    one = FpMatrix(p, [[1] * 5], E)
    assert generic_union(one, one, seed=4) == C.uniform(2, E)
    Gw, Hw = F.whirl_matrices()
    assert generic_union(Gw, Hw) == F.whirl()


@given(st.integers(0, 2**32 - 1))
def test_generic_union_never_freer_than_union(seed):
    rng = random.Random(seed)
    E = labels("e", rng.randint(1, 5))
    G = random_matrix(rng, MERSENNE_31, rng.randint(0, 2), E, density=0.5)
    H = random_matrix(rng, MERSENNE_31, rng.randint(0, 2), E, density=0.5)
    K = generic_union(G, H, seed=seed)
    U = C.union(column_matroid(G), column_matroid(H))
    assert np.all(K.table <= U.table)
