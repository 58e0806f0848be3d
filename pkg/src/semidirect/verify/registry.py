"""Check registry: every executable check, looked up by theorem id."""

from dataclasses import dataclass

from ..report import CheckReport
from .generators import InstanceGen, sub_seed

REGISTRY = {}


@dataclass(frozen=True)
class CheckDef:
    theorem_id: str
    run: object
    count: int
    max_n: int
    doc: str


def register(theorem_id, count=500, max_n=5):
    """Register ``fn(seed, count, max_n) -> CheckReport`` under ``theorem_id``."""

    def deco(fn):
        if theorem_id in REGISTRY:
            raise ValueError(f"duplicate check id {theorem_id!r}")

        def run(seed=0, count=None, max_n=None):
            return fn(
                seed,
                REGISTRY[theorem_id].count if count is None else count,
                REGISTRY[theorem_id].max_n if max_n is None else max_n,
            )

        run.__name__ = f"check_{theorem_id}"
        run.__doc__ = fn.__doc__
        REGISTRY[theorem_id] = CheckDef(theorem_id, run, count, max_n, (fn.__doc__ or "").strip())
        return run

    return deco


def instance_check(theorem_id, count=500, max_n=5):
    """Register a per-instance body ``body(gen) -> witness or None``.

    The body draws one instance from ``gen`` and returns None when every
    identity holds, otherwise a JSON-ready witness.  The run stops at the
    first failure.
    """

    def deco(body):
        def fn(seed, count, max_n):
            gen = InstanceGen(sub_seed(seed, theorem_id), max_n=max_n)
            for k in range(count):
                witness = body(gen)
                if witness is not None:
                    witness = dict(witness, instance_index=k)
                    return CheckReport(theorem_id, "fail", k + 1, seed, witness)
            return CheckReport(theorem_id, "pass", count, seed)

        fn.__doc__ = body.__doc__
        return register(theorem_id, count, max_n)(fn)

    return deco


def resolve(name):
    """Accept ``principal_dual`` or ``check_principal_dual``."""
    key = name[len("check_"):] if name.startswith("check_") else name
    if key not in REGISTRY:
        raise KeyError(name)
    return REGISTRY[key]
