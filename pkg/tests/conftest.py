import os
import sys

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from semidirect.verify.generators import SOURCES, InstanceGen, labels  # noqa: E402

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def matroids(draw, min_n=0, max_n=5, prefix="e", source=None):
    """A matroid from the seeded generator; hypothesis shrinks the seed and size."""
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(min_n, max_n))
    src = source or draw(st.sampled_from(SOURCES))
    return InstanceGen(seed).matroid(labels(prefix, n), src)


@st.composite
def matroid_pairs(draw, max_n=4):
    """Two matroids on one ground set."""
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(0, max_n))
    gen = InstanceGen(seed)
    E = labels("e", n)
    return gen.matroid(E), gen.matroid(E)


@st.composite
def principal_specs(draw, max_n=4):
    seed = draw(st.integers(0, 2**32 - 1))
    return InstanceGen(seed, max_n=max_n).principal_spec()


@st.composite
def masks(draw, M):
    return draw(st.integers(0, M.full))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
