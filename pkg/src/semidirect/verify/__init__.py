"""Executable property checks, seeded instance generators, and the suite runner.

Every check is registered under a theorem id in :data:`REGISTRY` and can be
run alone (``REGISTRY[id].run(seed, count, max_n)``) or through
:func:`run_suite`.  Each check draws from its own sub-seed, so running checks
in parallel or in a different order never changes a report.
"""

from concurrent.futures import ProcessPoolExecutor

from . import (  # noqa: F401  (importing registers the checks)
    checks_foundations,
    checks_union,
    checks_principal,
    checks_higgs,
    checks_transversal,
    checks_counterexamples,
)
from .generators import (
    InstanceGen,
    gen_matroid,
    gen_quotient_pair,
    gen_rank_preserving_extension,
)
from .registry import REGISTRY, CheckDef, resolve


def suite_ids(suite="all"):
    """Theorem ids selected by ``suite``: ``"all"``, one id, or a list of ids."""
    if suite == "all":
        return list(REGISTRY)
    names = [suite] if isinstance(suite, str) else list(suite)
    return [resolve(name).theorem_id for name in names]


def _run_one(args):
    theorem_id, seed, count, max_n = args
    return REGISTRY[theorem_id].run(seed=seed, count=count, max_n=max_n)


def run_suite(suite="all", seed=0, count=None, max_n=None, jobs=1):
    """Run the selected checks and yield their reports in registry order.

    ``count`` and ``max_n`` override every check's defaults when given.
    With ``jobs > 1`` checks run in worker processes; the reports are the
    same as with ``jobs=1``.
    """
    tasks = [(tid, seed, count, max_n) for tid in suite_ids(suite)]
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield _run_one(task)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_run_one, tasks)


def _export_checks():
    # check_<id> names for direct import
    for tid, cdef in REGISTRY.items():
        globals()[f"check_{tid}"] = cdef.run


_export_checks()

__all__ = [
    "REGISTRY",
    "CheckDef",
    "InstanceGen",
    "gen_matroid",
    "gen_quotient_pair",
    "gen_rank_preserving_extension",
    "resolve",
    "run_suite",
    "suite_ids",
] + [f"check_{tid}" for tid in REGISTRY]
