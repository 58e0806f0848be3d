"""Rank-table matroids and the axiom-level queries on them.

A :class:`Matroid` stores the rank of every subset of its ground set in a
numpy array indexed by bitmask.  Everything else (closure, circuits, flats,
duals, minors, weak order, quotients) is derived from that table.
"""

import enum
import os
from functools import lru_cache

import numpy as np

from ._bits import all_masks, bits_of, popcount, popcounts, spread
from .exceptions import (
    AxiomViolation,
    ElementInBasis,
    GroundSetMismatch,
    GroundTooLarge,
    InvalidMask,
    LabelCollision,
    NotABasis,
    OverlappingSets,
    UnknownLabel,
)

HARD_MAX_N = 16


def _max_n_from_env():
    raw = os.environ.get("MATROID_MAX_N")
    if raw is None:
        return HARD_MAX_N
    try:
        value = int(raw)
    except ValueError:
        return HARD_MAX_N
    return max(0, min(value, HARD_MAX_N))


MAX_N = _max_n_from_env()


class GroundSet:
    """Ordered, immutable list of distinct string labels.

    Bit ``i`` of any mask over this ground set refers to ``labels[i]``.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels):
        if isinstance(labels, GroundSet):
            labels = labels.labels
        labels = tuple(labels)
        for lab in labels:
            if not isinstance(lab, str):
                raise TypeError(f"labels must be strings, got {lab!r}")
        if len(labels) > MAX_N:
            raise GroundTooLarge(f"{len(labels)} elements exceeds MAX_N={MAX_N}")
        index = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise LabelCollision(f"duplicate label {lab!r}")
            index[lab] = i
        self.labels = labels
        self._index = index

    @property
    def size(self):
        return len(self.labels)

    @property
    def full(self):
        return (1 << len(self.labels)) - 1

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self._index

    def __eq__(self, other):
        if not isinstance(other, GroundSet):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"GroundSet({list(self.labels)!r})"

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"{label!r} is not in the ground set") from None

    def mask(self, subset):
        """Coerce ``subset`` to a mask.

        Accepts an int mask, a single label, or an iterable of labels.
        """
        if isinstance(subset, (int, np.integer)) and not isinstance(subset, bool):
            subset = int(subset)
            if subset < 0 or subset > self.full:
                raise InvalidMask(f"mask {subset} out of range for {self.size} elements")
            return subset
        if isinstance(subset, str):
            return 1 << self.index(subset)
        out = 0
        for lab in subset:
            out |= 1 << self.index(lab)
        return out

    def labels_of(self, mask):
        return [self.labels[i] for i in bits_of(mask)]

    def transfer(self, mask, other):
        """Re-express ``mask`` (over self) as a mask over ``other`` by label."""
        return other.mask(self.labels_of(mask))


def as_ground(ground):
    return ground if isinstance(ground, GroundSet) else GroundSet(ground)


@lru_cache(maxsize=None)
def _pair_bases(n, i, j):
    masks = all_masks(n)
    keep = (masks & ((1 << i) | (1 << j))) == 0
    return masks[keep]


def check_axioms(table, n):
    """Raise :class:`AxiomViolation` unless ``table`` is a matroid rank function.

    Monotonicity is checked on covering pairs and submodularity on the local
    form r(X+a) + r(X+b) >= r(X+a+b) + r(X); both are equivalent to the global
    statements for any set function.
    """
    if table[0] != 0:
        raise AxiomViolation("normalization", (0,), f"r(empty) = {int(table[0])}")
    pc = popcounts(n)
    bad = np.flatnonzero((table < 0) | (table > pc))
    if bad.size:
        x = int(bad[0])
        raise AxiomViolation("bounds", (x,), f"r = {int(table[x])}, |X| = {popcount(x)}")
    for i in range(n):
        view = table.reshape(-1, 2, 1 << i)
        drop = np.flatnonzero((view[:, 1, :] < view[:, 0, :]).ravel())
        if drop.size:
            k = int(drop[0])
            x = (k >> i) << (i + 1) | (k & ((1 << i) - 1))
            raise AxiomViolation("monotonicity", (x, x | (1 << i)))
    for i in range(n):
        for j in range(i + 1, n):
            base = _pair_bases(n, i, j)
            a, b = 1 << i, 1 << j
            slack = table[base | a] + table[base | b] - table[base | a | b] - table[base]
            bad = np.flatnonzero(slack < 0)
            if bad.size:
                x = int(base[bad[0]])
                raise AxiomViolation("submodularity", (x | a, x | b))


class RegionClass(enum.Enum):
    """Which of the two principal-sum rank expressions is strictly smaller."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


class Matroid:
    """A matroid given by the rank of every subset of a labeled ground set.

    Parameters
    ----------
    ground : GroundSet or sequence of str
        Element labels; bit ``i`` of a mask refers to ``ground[i]``.
    rank_table : array-like of int, length ``2**len(ground)``
        ``rank_table[m]`` is the rank of the subset with mask ``m``.
    validate : bool, default True
        Check the rank axioms.  Only inner loops that already know the table
        is valid should turn this off.

    Instances are immutable; derived families are computed lazily and cached.
    """

    __slots__ = ("ground", "_table", "_cache")

    def __init__(self, ground, rank_table, validate=True):
        ground = as_ground(ground)
        table = np.array(rank_table, dtype=np.int64).reshape(-1)
        if table.shape[0] != 1 << ground.size:
            raise ValueError(
                f"rank table has {table.shape[0]} entries, expected {1 << ground.size}"
            )
        if validate:
            check_axioms(table, ground.size)
        table.setflags(write=False)
        self.ground = ground
        self._table = table
        self._cache = {}

    @classmethod
    def from_bases(cls, ground, bases, validate=True):
        """Build from a nonempty collection of bases (masks or label lists)."""
        ground = as_ground(ground)
        masks = all_masks(ground.size)
        table = np.zeros(1 << ground.size, dtype=np.int64)
        base_masks = [ground.mask(b) for b in bases]
        if not base_masks:
            raise ValueError("a matroid has at least one basis")
        for b in base_masks:
            np.maximum(table, np.bitwise_count(masks & b), out=table)
        M = cls(ground, table, validate=validate)
        if validate and sorted(set(base_masks)) != M.bases():
            raise AxiomViolation("bases", (), "collection is not the basis family of a matroid")
        return M

    # -- basic accessors -------------------------------------------------

    @property
    def table(self):
        """Read-only rank table."""
        return self._table

    @property
    def labels(self):
        return self.ground.labels

    @property
    def size(self):
        return self.ground.size

    @property
    def full(self):
        return self.ground.full

    def mask(self, subset):
        return self.ground.mask(subset)

    def rank(self, X=None):
        """Rank of ``X``, or of the whole matroid when ``X`` is omitted."""
        if X is None:
            return int(self._table[-1])
        return int(self._table[self.mask(X)])

    def __len__(self):
        return self.ground.size

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and np.array_equal(self._table, other._table)

    def __hash__(self):
        return hash((self.ground, self._table.tobytes()))

    def __repr__(self):
        return f"Matroid(rank={self.rank()}, ground={list(self.labels)!r})"

    def _cached(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            value = fn()
            self._cache[key] = value
            return value

    # -- independence ----------------------------------------------------

    def independent_array(self):
        return self._cached("indep", lambda: self._table == popcounts(self.size))

    def is_independent(self, X):
        X = self.mask(X)
        return int(self._table[X]) == popcount(X)

    def independent_sets(self):
        return np.flatnonzero(self.independent_array()).tolist()

    def bases(self):
        def compute():
            sel = self.independent_array() & (popcounts(self.size) == self.rank())
            return np.flatnonzero(sel).tolist()

        return list(self._cached("bases", compute))

    # -- closure and flats -----------------------------------------------

    def closure(self, X):
        X = self.mask(X)
        r = self._table[X]
        out = X
        for i in range(self.size):
            if self._table[X | (1 << i)] == r:
                out |= 1 << i
        return out

    def closure_array(self):
        """``closure_array()[X]`` is the mask of ``cl(X)``."""

        def compute():
            masks = all_masks(self.size)
            t = self._table
            out = masks.copy()
            for i in range(self.size):
                bit = 1 << i
                out |= np.where(t[masks | bit] == t, bit, 0)
            return out

        return self._cached("closure", compute)

    def flat_array(self):
        def compute():
            masks = all_masks(self.size)
            t = self._table
            ok = np.ones(t.shape, dtype=bool)
            for i in range(self.size):
                bit = 1 << i
                ok &= ((masks & bit) != 0) | (t[masks | bit] > t)
            return ok

        return self._cached("flat", compute)

    def is_flat(self, X):
        return bool(self.flat_array()[self.mask(X)])

    def flats(self):
        return np.flatnonzero(self.flat_array()).tolist()

    def cyclic_array(self):
        def compute():
            masks = all_masks(self.size)
            t = self._table
            ok = np.ones(t.shape, dtype=bool)
            for i in range(self.size):
                bit = 1 << i
                ok &= ((masks & bit) == 0) | (t[masks & ~bit] == t)
            return ok

        return self._cached("cyclic", compute)

    def is_cyclic(self, X):
        return bool(self.cyclic_array()[self.mask(X)])

    def cyclic_sets(self):
        return np.flatnonzero(self.cyclic_array()).tolist()

    def cyclic_flats(self):
        return np.flatnonzero(self.cyclic_array() & self.flat_array()).tolist()

    # -- circuits ----------------------------------------------------------

    def circuit_array(self):
        def compute():
            masks = all_masks(self.size)
            indep = self.independent_array()
            ok = ~indep
            for i in range(self.size):
                bit = 1 << i
                ok &= ((masks & bit) == 0) | indep[masks & ~bit]
            return ok

        return self._cached("circuit", compute)

    def circuits(self):
        return np.flatnonzero(self.circuit_array()).tolist()

    def fundamental_circuit(self, B, a):
        """The unique circuit inside ``B + a`` for a basis ``B`` and ``a`` not in ``B``."""
        B = self.mask(B)
        a = self.mask(a)
        if popcount(a) != 1:
            raise InvalidMask("fundamental_circuit takes a single element")
        if not (self.is_independent(B) and popcount(B) == self.rank()):
            raise NotABasis(f"{self.ground.labels_of(B)} is not a basis")
        if B & a:
            raise ElementInBasis(f"{self.ground.labels_of(a)[0]!r} is in the basis")
        r = self.rank()
        out = a
        for i in bits_of(B):
            if self._table[(B & ~(1 << i)) | a] == r:
                out |= 1 << i
        return out

    # -- loops, coloops, separators -------------------------------------

    def loops(self):
        return self.closure(0)

    def coloops(self):
        full, r = self.full, self.rank()
        out = 0
        for i in range(self.size):
            if self._table[full & ~(1 << i)] == r - 1:
                out |= 1 << i
        return out

    def separators(self):
        t = self._table
        return np.flatnonzero(t + t[::-1] == t[-1]).tolist()

    def is_connected(self):
        if self.size == 0:
            return False
        return len(self.separators()) == 2

    # -- derived matroids ------------------------------------------------

    def dual(self):
        t = self._table
        return Matroid(self.ground, popcounts(self.size) - t[-1] + t[::-1])

    def minor(self, delete=0, contract=0):
        """``(M \\ delete) / contract`` on the remaining labels, in original order."""
        D = self.mask(delete)
        C = self.mask(contract)
        if D & C:
            raise OverlappingSets("deletion and contraction sets intersect")
        keep = [i for i in range(self.size) if not (D | C) >> i & 1]
        idx = spread(len(keep), keep) | C
        table = self._table[idx] - self._table[C]
        return Matroid([self.labels[i] for i in keep], table)

    def restrict(self, X):
        return self.minor(delete=self.full & ~self.mask(X))

    def delete(self, X):
        return self.minor(delete=X)

    def contract(self, X):
        return self.minor(contract=X)

    def reorder(self, labels):
        """Same matroid with the ground set listed in the order ``labels``."""
        labels = tuple(labels)
        if sorted(labels) != sorted(self.labels):
            raise GroundSetMismatch("reorder needs a permutation of the ground set")
        positions = [self.ground.index(lab) for lab in labels]
        return Matroid(labels, self._table[spread(self.size, positions)])

    def relabel(self, mapping):
        """Rename labels through ``mapping`` (missing keys keep their name)."""
        return Matroid([mapping.get(lab, lab) for lab in self.labels], self._table)


def _same_ground(M1, M2):
    if M1.ground != M2.ground:
        raise GroundSetMismatch(f"{M1.labels} vs {M2.labels}")


def equals(M1, M2):
    """Labeled equality; the ground sets must match exactly."""
    _same_ground(M1, M2)
    return bool(np.array_equal(M1.table, M2.table))


def weak_leq(M1, M2):
    """True iff ``r_1(X) <= r_2(X)`` for every subset ``X``."""
    _same_ground(M1, M2)
    return bool(np.all(M1.table <= M2.table))


def is_quotient(Q, L):
    """True iff ``cl_L(F)`` is contained in ``cl_Q(F)`` for every ``F``."""
    _same_ground(Q, L)
    masks = all_masks(Q.size)
    tq, tl = Q.table, L.table
    for i in range(Q.size):
        up = masks | (1 << i)
        in_l = tl[up] == tl
        in_q = tq[up] == tq
        if np.any(in_l & ~in_q):
            return False
    return True


def region_table(M, N, A, B):
    """Sign of ``(r_M(X+A) + r_N(Y)) - (r_M(X) + r_N(Y-B) + |Y & B|)`` for every X+Y.

    The result is indexed by masks over the ground set S followed by T.
    """
    A, B = M.mask(A), N.mask(B)
    rm, rn = M.table, N.table
    sm = all_masks(M.size)
    tm = all_masks(N.size)
    first = rm[sm | A][None, :] + rn[:, None]
    second = rm[None, :] + (rn[tm & ~B] + np.bitwise_count(tm & B))[:, None]
    return np.sign(first - second).ravel()


def classify_region(M, N, A, B, X, Y):
    """Classify ``X + Y`` into the LESS/EQUAL/GREATER region of ``(M, N; A, B)``."""
    A, X = M.mask(A), M.mask(X)
    B, Y = N.mask(B), N.mask(Y)
    first = M.rank(X | A) + N.rank(Y)
    second = M.rank(X) + N.rank(Y & ~B) + popcount(Y & B)
    if first < second:
        return RegionClass.LESS
    if first == second:
        return RegionClass.EQUAL
    return RegionClass.GREATER
