"""Small named matroids used by the counterexample checks and the tests.

Each builder returns fresh objects.  Where an example is only described
geometrically, the matrix or rank formula here is one concrete choice
checked against its defining properties.
"""

import numpy as np

from .. import constructions as C
from .._bits import all_masks, popcounts
from ..core import Matroid
from ..linearalg import MERSENNE_31, FpMatrix, column_matroid
from ..transversal import SetSystem, transversal_matroid

# -- rank-2 example on a..e ------------------------------------------------

FIVE_POINT_LABELS = ("a", "b", "c", "d", "e")
FIVE_POINT_FLATS = [["d"], ["a", "d"], ["b", "c", "d"], ["d", "e"], ["a", "b", "c", "d", "e"]]


def five_point():
    """Rank 2 on a..e: d a loop, b parallel to c, bases ab ac ae be ce."""
    bases = [["a", "b"], ["a", "c"], ["a", "e"], ["b", "e"], ["c", "e"]]
    return Matroid.from_bases(FIVE_POINT_LABELS, bases)


def five_point_matrix(p=5, x=(1, 1, 1)):
    xa, xb, xc = x
    return FpMatrix(p, [[xa, xb, xc, 0, 0], [1, 0, 0, 0, 1]], FIVE_POINT_LABELS)


def five_point_parts():
    """The two rank-1 matroids whose union is :func:`five_point`."""
    labs = FIVE_POINT_LABELS
    G = column_matroid(FpMatrix(2, [[1, 1, 1, 0, 0]], labs))
    H = column_matroid(FpMatrix(2, [[1, 0, 0, 0, 1]], labs))
    return G, H


# -- U_{3,4} and U_{1,2} -----------------------------------------------------

UNION_S = ("a", "a'", "b", "b'")
UNION_T = ("c", "c'")


def union_example():
    """``(M, N, M_plus)``: M = U_{3,4}, N = U_{1,2}, and c, c' put on both lines."""
    M = C.uniform(3, UNION_S)
    N = C.uniform(1, UNION_T)
    vectors = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 1, 0), (1, 1, 0)]
    D = FpMatrix(7, np.array(vectors, dtype=object).T, UNION_S + UNION_T)
    return M, N, column_matroid(D)


def union_example_sum():
    M, N, M_plus = union_example()
    return C.union(M_plus, C.add_loops(N, M.labels))


UNION_NONSPANNING_CIRCUITS = [["a", "a'", "b", "b'"], ["a", "a'", "c", "c'"], ["b", "b'", "c", "c'"]]
UNION_DUAL_NONSPANNING_CIRCUITS = [["a", "a'"], ["b", "b'"], ["c", "c'"]]


# -- three 4-point lines through x -------------------------------------------

THREE_LINES_S = ("x", "p1", "p2", "p3", "q1", "q2", "q3")
THREE_LINES_T = ("a", "b", "c")


def _lines_through_point_table(n_lines, per_line):
    # x is bit 0, line k holds bits 1 + k*per_line .. ; rank is
    # [x in closure] + number of lines met, where x is in the closure of X
    # when X holds x or two points of some line
    n = 1 + n_lines * per_line
    masks = all_masks(n)
    has_x = (masks & 1).astype(bool)
    met = np.zeros(1 << n, dtype=np.int64)
    for k in range(n_lines):
        line = ((1 << per_line) - 1) << (1 + k * per_line)
        count = np.bitwise_count(masks & line)
        met += count >= 1
        has_x |= count >= 2
    return met + has_x


def two_lines():
    """Parallel connection at x of two 4-point lines."""
    return Matroid(THREE_LINES_S, _lines_through_point_table(2, 3))


def three_lines():
    """Parallel connection at x of three 4-point lines, as an explicit rank table."""
    return Matroid(THREE_LINES_S + THREE_LINES_T, _lines_through_point_table(3, 3))


def three_lines_spec():
    return C.PrincipalSumSpec(two_lines(), C.uniform(1, THREE_LINES_T), ["x"], list(THREE_LINES_T))


# -- the 3-whirl as a union of extensions of U_{2,3} and U_{1,3} ------------------

WHIRL_S = ("a", "b", "c")
WHIRL_T = ("d", "e", "f")
WHIRL_LINES = [["a", "b", "c"], ["a", "e", "f"], ["c", "d", "e"]]


def whirl():
    """Rank 3 on a..f with exactly the three 3-point lines in WHIRL_LINES."""
    labels = WHIRL_S + WHIRL_T
    table = np.minimum(popcounts(6), 3)
    for line in WHIRL_LINES:
        table[sum(1 << labels.index(x) for x in line)] = 2
    return Matroid(labels, table)


def whirl_matrices(p=MERSENNE_31):
    """Matrices for the two extensions: d parallel to c, e a loop, f parallel to a."""
    labels = WHIRL_S + WHIRL_T
    G = FpMatrix(p, [[1, 0, 1, 1, 0, 1], [0, 1, 1, 1, 0, 0]], labels)
    H = FpMatrix(p, [[0, 0, 0, 1, 1, 1]], labels)
    return G, H


def whirl_parts():
    """``(M, N, M_plus, N_0)`` with ``union(M_plus, N_0)`` the whirl."""
    G, H = whirl_matrices()
    M_plus = column_matroid(G)
    N_0 = column_matroid(H)
    M = C.uniform(2, WHIRL_S)
    N = C.uniform(1, WHIRL_T)
    return M, N, M_plus, N_0


# -- three parallel pairs ------------------------------------------------------

PAIRS = ("a", "A", "b", "B", "c", "C")


def three_pairs():
    return transversal_matroid(SetSystem.from_labels(PAIRS, [["a", "A"], ["b", "B"], ["c", "C"]]))


def three_pairs_truncated():
    """Rank-2 truncation of three parallel pairs; not transversal."""
    return C.truncation(three_pairs(), 2)


def three_pairs_free_extension():
    """Free extension by x of three parallel pairs; ground order x first."""
    K = C.free_extension(three_pairs(), "x")
    return K.reorder(("x",) + PAIRS)


# -- fundamental transversal inputs whose principal sum is not fundamental ------


def nonfundamental_sum_spec():
    """``(M, N; A, B)`` with M, N fundamental transversal, A cyclic in M, B not
    a cyclic flat of N*, and a principal sum that is not fundamental.

    Found by a seeded random search over small fundamental set systems.
    """
    M = transversal_matroid(SetSystem.from_labels(["s0", "s1"], [["s0", "s1"]]))
    N = transversal_matroid(
        SetSystem.from_labels(
            ["t0", "t1", "t2", "t3", "t4"],
            [["t1", "t3"], ["t2", "t4"], ["t0", "t1", "t4"]],
        )
    )
    return C.PrincipalSumSpec(M, N, ["s0", "s1"], ["t0"])


def u24_pair():
    """Two copies of U_{2,4}; contraction does not distribute over their union."""
    U = C.uniform(2, ["e0", "e1", "e2", "e3"])
    return U, U
