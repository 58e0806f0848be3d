"""Seeded random instances: matroids, quotient pairs, extensions, principal-sum data.

Every draw goes through one ``random.Random`` owned by an :class:`InstanceGen`,
so a seed reproduces the whole instance stream.
"""

import random
from dataclasses import dataclass, field

from .. import constructions as C
from .._bits import bits_of
from ..core import MAX_N
from ..linearalg import column_matroid, random_matrix
from ..transversal import SetSystem, transversal_matroid

SOURCES = ("uniform", "transversal", "matrix", "minor", "dual")
DEFAULT_WEIGHTS = {"uniform": 1, "transversal": 2, "matrix": 3, "minor": 2, "dual": 2}


def sub_seed(seed, name):
    """Stable per-check seed so checks never share (or perturb) a stream."""
    return f"{seed}:{name}"


def labels(prefix, n):
    return [f"{prefix}{i}" for i in range(n)]


def random_subset(rng, mask, p=0.5):
    out = 0
    for i in bits_of(mask):
        if rng.random() < p:
            out |= 1 << i
    return out


@dataclass
class InstanceGen:
    """Random instance stream.

    ``max_n`` bounds each side (n_S, n_T); ``weights`` mixes the sources
    listed in :data:`SOURCES`.
    """

    seed: object = 0
    max_n: int = 5
    min_n: int = 1
    weights: dict = field(default_factory=lambda: dict(DEFAULT_WEIGHTS))

    def __post_init__(self):
        self.rng = random.Random(self.seed)

    # -- sizes and subsets ---------------------------------------------

    def size(self, lo=None, hi=None):
        lo = self.min_n if lo is None else lo
        hi = self.max_n if hi is None else hi
        return self.rng.randint(lo, hi)

    def subset(self, mask, p=0.5):
        return random_subset(self.rng, mask, p)

    # -- matroids --------------------------------------------------------

    def source(self):
        names = [s for s in SOURCES if self.weights.get(s, 0) > 0]
        return self.rng.choices(names, weights=[self.weights[s] for s in names])[0]

    def matroid(self, labs, source=None, depth=0):
        """Random matroid on ``labs`` from ``source`` (drawn from the mix if None)."""
        labs = list(labs)
        n = len(labs)
        source = source or self.source()
        if depth > 2 and source in ("minor", "dual"):
            source = "matrix"
        rng = self.rng
        if source == "uniform":
            return C.uniform(rng.randint(0, n), labs)
        if source == "transversal":
            return transversal_matroid(self.set_system(labs))
        if source == "matrix":
            p = rng.choice((2, 3, 5, 7))
            rows = rng.randint(0, n)
            D = random_matrix(rng, p, rows, labs, density=rng.choice((0.4, 0.7, 1.0)))
            return column_matroid(D)
        if source == "minor":
            extra = min(rng.randint(1, 3), MAX_N - n)
            if extra <= 0:
                return self.matroid(labs, "matrix", depth + 1)
            big = self.matroid(labs + labels(f"_x{depth}_", extra), depth=depth + 1)
            hidden = ((1 << extra) - 1) << n
            contract = self.subset(hidden)
            return big.minor(delete=hidden & ~contract, contract=contract)
        if source == "dual":
            return self.matroid(labs, depth=depth + 1).dual()
        raise ValueError(f"unknown source {source!r}")

    def set_system(self, labs, r=None, fundamental=False):
        labs = list(labs)
        n = len(labs)
        full = (1 << n) - 1
        r = self.rng.randint(0, max(1, min(n, 4))) if r is None else r
        p = self.rng.choice((0.3, 0.5, 0.7))
        sets = [self.subset(full, p) for _ in range(r)]
        if fundamental:
            # reserve a private element for each set
            order = list(range(n))
            self.rng.shuffle(order)
            r = min(r, n)
            sets = sets[:r]
            private = order[:r]
            priv_mask = sum(1 << i for i in private)
            sets = [(D & ~priv_mask) | (1 << private[k]) for k, D in enumerate(sets)]
        return SetSystem(labs, tuple(sets))

    def transversal(self, labs, fundamental=False):
        return transversal_matroid(self.set_system(labs, fundamental=fundamental))

    # -- derived structures ------------------------------------------------

    def quotient_pair(self, labs):
        """``(Q, L)`` with ``Q`` a quotient of ``L`` built by elementary quotients."""
        L = self.matroid(labs)
        return self.quotient_of(L), L

    def lift_of(self, N):
        """A random lift of ``N`` (dual of a quotient of the dual)."""
        return self.quotient_of(N.dual()).dual()

    def quotient_of(self, L):
        """A random quotient of ``L``: truncations, contractions made loops, and
        contractions of principal extensions, applied a few times."""
        labs = list(L.labels)
        Q = L
        for _ in range(self.rng.randint(0, 3)):
            kind = self.rng.random()
            if kind < 0.3 and Q.rank() > 0:
                Q = C.truncation(Q, Q.rank() - 1)
            elif kind < 0.5:
                A = self.subset(Q.full)
                Q = C.direct_sum(Q.contract(A), C.loops_on(Q.ground.labels_of(A))).reorder(labs)
            elif Q.size < MAX_N:
                A = self.subset(Q.full)
                Q = C.principal_extension(Q, A, "_q").contract("_q")
        return Q

    def extension_set(self, K):
        """A set ``A`` on which to put a new element: loop, parallel, flat, or free."""
        rng = self.rng
        kind = rng.random()
        if kind < 0.15:
            return 0
        if kind < 0.3 and K.size:
            return 1 << rng.randrange(K.size)
        if kind < 0.45:
            return K.full
        return self.subset(K.full, rng.choice((0.2, 0.4, 0.6)))

    def rank_preserving_extension(self, M, T_labels):
        """Extension of ``M`` to ``M.labels + T_labels`` with the same rank."""
        K = M
        for t in T_labels:
            K = C.principal_extension(K, self.extension_set(K), t)
        return K

    def union_data(self, max_n=None):
        """``(M, N, M_plus)`` for the union construction.

        Half the time ``M`` is read off a random ``M_plus`` (so the extension
        need not be principal); otherwise ``M`` comes first and is extended.
        """
        hi = self.max_n if max_n is None else max_n
        S, T = labels("s", self.size(hi=hi)), labels("t", self.size(hi=hi))
        N = self.matroid(T)
        if self.rng.random() < 0.5:
            K = self.matroid(S + T)
            M = K.restrict(S)
            return M, N, C.truncation(K, M.rank())
        M = self.matroid(S)
        return M, N, self.rank_preserving_extension(M, T)

    def coextension(self, N, S_labels):
        """Coextension of ``N`` to ``S_labels + N.labels`` of rank ``r(N) + |S|``."""
        ext = self.rank_preserving_extension(N.dual(), S_labels).dual()
        return ext.reorder(list(S_labels) + list(N.labels))

    def choose_A(self, M):
        rng = self.rng
        kind = rng.random()
        if kind < 0.1:
            return 0
        if kind < 0.2:
            return M.full
        if kind < 0.35:
            return M.loops() & self.subset(M.full)
        if kind < 0.55:
            return rng.choice(M.cyclic_flats())
        if kind < 0.7:
            return rng.choice(M.flats())
        return self.subset(M.full)

    def choose_B(self, N):
        rng = self.rng
        kind = rng.random()
        if kind < 0.1:
            return 0
        if kind < 0.2:
            return N.full
        if kind < 0.35:
            return N.coloops() & self.subset(N.full)
        if kind < 0.55:
            return rng.choice(N.dual().cyclic_flats())
        return self.subset(N.full)

    def principal_spec(self, max_n=None, source=None):
        """Random ``(M, N, A, B)`` on S = s0.. and T = t0.."""
        hi = self.max_n if max_n is None else max_n
        M = self.matroid(labels("s", self.size(hi=hi)), source)
        N = self.matroid(labels("t", self.size(hi=hi)), source)
        return C.PrincipalSumSpec(M, N, self.choose_A(M), self.choose_B(N))


def gen_matroid(gen, labs=None, source=None):
    labs = labels("e", gen.size()) if labs is None else labs
    return gen.matroid(labs, source)


def gen_quotient_pair(gen, labs=None):
    labs = labels("e", gen.size()) if labs is None else labs
    return gen.quotient_pair(labs)


def gen_rank_preserving_extension(M, gen, T_labels):
    return gen.rank_preserving_extension(M, T_labels)
