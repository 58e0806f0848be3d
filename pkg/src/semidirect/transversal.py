"""Transversal matroids: set-system presentations and the Mason-Ingleton test."""

from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from ._bits import bits_of, popcounts, subset_sum
from .core import GroundSet, Matroid, as_ground
from .exceptions import CyclicFlatCapExceeded, SearchBudgetExceeded
from .report import CheckReport

Z_CAP = 15
SEARCH_BUDGET = 20000


@dataclass(frozen=True)
class SetSystem:
    """An ordered list of subsets ``(D_1, ..., D_r)`` of a ground set, as masks."""

    ground: GroundSet
    sets: tuple

    def __post_init__(self):
        ground = as_ground(self.ground)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "sets", tuple(ground.mask(D) for D in self.sets))

    @classmethod
    def from_labels(cls, ground, sets):
        ground = as_ground(ground)
        return cls(ground, tuple(ground.mask(list(D)) for D in sets))

    def label_sets(self):
        return [self.ground.labels_of(D) for D in self.sets]


def _sets_of_elements(n, sets):
    return [[k for k, D in enumerate(sets) if D >> e & 1] for e in range(n)]


def _augment(e, sets_of, owner, seen):
    for k in sets_of[e]:
        if k in seen:
            continue
        seen.add(k)
        if owner[k] < 0 or _augment(owner[k], sets_of, owner, seen):
            owner[k] = e
            return True
    return False


def _matching_ranks(n, sets, target=None):
    """Maximum-matching size for every subset, built one element at a time.

    With ``target`` given, stop and return None at the first disagreement.
    """
    sets_of = _sets_of_elements(n, sets)
    size = 1 << n
    table = np.zeros(size, dtype=np.int64)
    owners = [None] * size
    owners[0] = (-1,) * len(sets)
    for m in range(1, size):
        e = m.bit_length() - 1
        parent = m ^ (1 << e)
        owner = list(owners[parent])
        if _augment(e, sets_of, owner, set()):
            owners[m] = tuple(owner)
            table[m] = table[parent] + 1
        else:
            owners[m] = owners[parent]
            table[m] = table[parent]
        if target is not None and table[m] != target[m]:
            return None
    return table


def transversal_matroid(system):
    """Matroid whose independent sets are the partial transversals of ``system``."""
    return Matroid(system.ground, _matching_ranks(system.ground.size, system.sets))


def _family_tables(Z, full):
    z = len(Z)
    unions = np.zeros(1 << z, dtype=np.int64)
    meets = np.full(1 << z, full, dtype=np.int64)
    for i, mask in enumerate(Z):
        u = unions.reshape(-1, 2, 1 << i)
        u[:, 1, :] = u[:, 0, :] | mask
        w = meets.reshape(-1, 2, 1 << i)
        w[:, 1, :] = w[:, 0, :] & mask
    return unions, meets


def mason_ingleton(M, z_cap=Z_CAP):
    """Both sides of the Mason-Ingleton inequality for every family of cyclic flats.

    Returns ``(Z, lhs, rhs)`` where index ``F`` of ``lhs``/``rhs`` encodes a
    subfamily of ``Z`` as a bitmask; ``lhs[F] = r(meet F)`` and ``rhs[F]`` is the
    inclusion-exclusion sum over nonempty subfamilies of ``F``.
    """
    Z = M.cyclic_flats()
    if len(Z) > z_cap:
        raise CyclicFlatCapExceeded(f"{len(Z)} cyclic flats exceeds cap {z_cap}")
    z = len(Z)
    unions, meets = _family_tables(Z, M.full)
    sign = np.where(popcounts(z) % 2 == 1, 1, -1)
    terms = sign * M.table[unions]
    terms[0] = 0
    rhs = subset_sum(terms, z)
    lhs = M.table[meets]
    return Z, lhs, rhs


def _mi_report(M, theorem_id, bad, Z, lhs, rhs):
    if not bad.size:
        return CheckReport(theorem_id, "pass", instances_run=1)
    F = int(bad[0])
    witness = {
        "ground": list(M.labels),
        "rank_table": M.table.tolist(),
        "family": [M.ground.labels_of(Z[i]) for i in bits_of(F)],
        "rank_of_intersection": int(lhs[F]),
        "inclusion_exclusion": int(rhs[F]),
    }
    return CheckReport(theorem_id, "fail", instances_run=1, witness=witness)


def is_transversal(M, z_cap=Z_CAP):
    """Mason-Ingleton test; a failing report names a violating family."""
    Z, lhs, rhs = mason_ingleton(M, z_cap)
    bad = np.flatnonzero(lhs > rhs)
    bad = bad[bad > 0]
    return _mi_report(M, "transversal", bad, Z, lhs, rhs)


def is_fundamental_transversal(M, z_cap=Z_CAP):
    """Equality in the Mason-Ingleton inequality for every nonempty family."""
    Z, lhs, rhs = mason_ingleton(M, z_cap)
    bad = np.flatnonzero(lhs != rhs)
    bad = bad[bad > 0]
    return _mi_report(M, "fundamental_transversal", bad, Z, lhs, rhs)


def has_fundamental_presentation(system):
    """True iff every set has an element that lies in no other set."""
    for k, D in enumerate(system.sets):
        others = 0
        for j, E in enumerate(system.sets):
            if j != k:
                others |= E
        if not D & ~others:
            return False
    return True


def _candidates(M):
    return [M.full & ~Z for Z in M.cyclic_flats() if Z != M.full]


def _search(M, budget):
    r = M.rank()
    cands = _candidates(M)
    count = 0
    for combo in combinations_with_replacement(cands, r):
        count += 1
        if count > budget:
            raise SearchBudgetExceeded(f"more than {budget} candidate presentations")
        if _matching_ranks(M.size, combo, target=M.table) is not None:
            yield SetSystem(M.ground, combo)


def _fundamental_search(M, budget):
    # in a fundamental presentation with private basis B, the set owning b
    # lies inside the fundamental cocircuit E - cl(B - b); try those
    cl = M.closure_array()
    for count, B in enumerate(M.bases(), 1):
        if count > budget:
            raise SearchBudgetExceeded(f"more than {budget} candidate bases")
        sets = tuple(M.full & ~int(cl[B & ~(1 << b)]) for b in bits_of(B))
        system = SetSystem(M.ground, sets)
        if _matching_ranks(M.size, sets, target=M.table) is not None:
            return system
    return None


def presentation_search(M, budget=SEARCH_BUDGET, fundamental=False):
    """Find a presentation of ``M``, or None.

    Candidates are multisets of ``r(M)`` complements of cyclic flats.  With
    ``fundamental=True`` the candidates are instead the fundamental cocircuits
    of each basis, and any hit is a presentation where every set owns a
    private element.
    """
    if fundamental:
        return _fundamental_search(M, budget)
    return next(_search(M, budget), None)
