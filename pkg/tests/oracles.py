"""Slow, definition-level reference implementations used only by the tests.

Nothing here calls into the package's own algorithms: each function works
from the rank table (or raw matrix / set system) with plain Python loops.
"""

from itertools import combinations, permutations


def subsets_of(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def union_rank(tg, th, n):
    """Matroid union by minimizing over every submask (3^n work)."""
    out = []
    for X in range(1 << n):
        out.append(min(tg[W] + th[W] + bin(X & ~W).count("1") for W in subsets_of(X)))
    return out


def union_independent(ig, ih, n):
    """I is independent in the union iff it splits into a G-part and an H-part."""
    return [any(ig[W] and ih[I & ~W] for W in subsets_of(I)) for I in range(1 << n)]


def closure(t, X, n):
    return X | sum(1 << i for i in range(n) if t[X | (1 << i)] == t[X])


def flats(t, n):
    return [X for X in range(1 << n) if closure(t, X, n) == X]


def circuits(t, n):
    dep = [t[X] < bin(X).count("1") for X in range(1 << n)]
    return [X for X in range(1 << n) if dep[X] and not any(dep[X & ~(1 << i)] for i in range(n) if X >> i & 1)]


def cyclic_sets(t, n):
    """Unions of circuits (including the empty union)."""
    cs = circuits(t, n)
    out = []
    for X in range(1 << n):
        u = 0
        for C in cs:
            if C & ~X == 0:
                u |= C
        if u == X:
            out.append(X)
    return out


def dual(t, n):
    full = (1 << n) - 1
    return [bin(X).count("1") - t[full] + t[full & ~X] for X in range(1 << n)]


def principal_sum_rank(tm, tn, nS, nT, A, B):
    out = [0] * (1 << (nS + nT))
    for Y in range(1 << nT):
        for X in range(1 << nS):
            first = tm[X | A] + tn[Y]
            second = tm[X] + tn[Y & ~B] + bin(Y & B).count("1")
            out[X | (Y << nS)] = min(first, second)
    return out


def transversal_rank(sets, n):
    """Largest partial transversal inside each X, by trying assignments."""
    out = []
    for X in range(1 << n):
        elems = [e for e in range(n) if X >> e & 1]
        best = 0
        for k in range(min(len(elems), len(sets)), 0, -1):
            found = False
            for chosen in combinations(elems, k):
                for idx in permutations(range(len(sets)), k):
                    if all(sets[i] >> e & 1 for e, i in zip(chosen, idx)):
                        found = True
                        break
                if found:
                    break
            if found:
                best = k
                break
        out.append(best)
    return out


def gf_rank(rows, p):
    """Rank of a list of rows over GF(p) by textbook elimination."""
    rows = [[v % p for v in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def column_rank_table(entries, p, n):
    out = []
    for X in range(1 << n):
        cols = [j for j in range(n) if X >> j & 1]
        sub = [[row[j] for j in cols] for row in entries]
        out.append(gf_rank(sub, p) if cols and sub else 0)
    return out


def mason_ingleton_holds(t, n, zflats, equality=False):
    """Every nonempty family of cyclic flats, straight from the inequality."""
    for k in range(1, len(zflats) + 1):
        for fam in combinations(zflats, k):
            inter = (1 << n) - 1
            for Z in fam:
                inter &= Z
            rhs = 0
            for j in range(1, k + 1):
                for sub in combinations(fam, j):
                    u = 0
                    for Z in sub:
                        u |= Z
                    rhs += (-1) ** (j + 1) * t[u]
            if t[inter] > rhs or (equality and t[inter] != rhs):
                return False
    return True
