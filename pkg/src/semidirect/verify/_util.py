"""Witness builders and whole-table helpers shared by the checks."""

import numpy as np

from .._bits import all_masks, bits_of, popcounts
from ..io import matroid_to_json


def mj(M):
    return matroid_to_json(M)


def spec_json(spec):
    return {
        "M": mj(spec.M),
        "N": mj(spec.N),
        "A": spec.M.ground.labels_of(spec.A),
        "B": spec.N.ground.labels_of(spec.B),
    }


def fail(prop, instance, **details):
    out = {"property": prop, "instance": instance}
    out.update(details)
    return out


def table_mismatch(prop, instance, expected, got):
    """Witness for the first subset where two matroids on one ground set differ."""
    if expected.ground != got.ground:
        return fail(
            prop,
            instance,
            expected_ground=list(expected.labels),
            got_ground=list(got.labels),
        )
    bad = np.flatnonzero(expected.table != got.table)
    if not bad.size:
        return None
    X = int(bad[0])
    return fail(
        prop,
        instance,
        subset=expected.ground.labels_of(X),
        expected=int(expected.table[X]),
        got=int(got.table[X]),
    )


def array_mismatch(prop, instance, ground, expected, got):
    """Witness for the first mask where two boolean/int arrays over ``ground`` differ."""
    bad = np.flatnonzero(np.asarray(expected) != np.asarray(got))
    if not bad.size:
        return None
    X = int(bad[0])
    e, g = expected[X], got[X]
    if isinstance(e, (np.integer, int)) and not isinstance(e, (bool, np.bool_)):
        e, g = int(e), int(g)
    else:
        e, g = bool(e), bool(g)
    return fail(prop, instance, subset=ground.labels_of(X), expected=e, got=g)


def family(ground, masks):
    return sorted(ground.labels_of(m) for m in masks)


def split_masks(nS, nT):
    """``(X, Y)`` arrays giving the S-part and T-part of every S-then-T mask."""
    m = all_masks(nS + nT)
    return m & ((1 << nS) - 1), m >> nS


def flat_within(M, R):
    """``out[W]``: ``W - outside`` is a flat of ``M | R`` (evaluated at ``W & R``)."""
    masks = all_masks(M.size)
    t = M.table
    W = masks & R
    ok = np.ones(masks.shape, dtype=bool)
    for i in bits_of(R):
        bit = 1 << i
        ok &= ((W & bit) != 0) | (t[W | bit] > t[W])
    return ok


def no_coloops_outside(M, A):
    """``out[X]``: no element of ``X - A`` is a coloop of ``M | (X + A)``."""
    masks = all_masks(M.size)
    t = M.table
    XA = masks | A
    ok = np.ones(masks.shape, dtype=bool)
    for i in range(M.size):
        bit = 1 << i
        if A & bit:
            continue
        ok &= ((masks & bit) == 0) | (t[XA & ~bit] == t[XA])
    return ok


def pc(n):
    return popcounts(n)
