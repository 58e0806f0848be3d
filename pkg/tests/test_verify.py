import json

import pytest
from hypothesis import given, strategies as st

from semidirect import constructions as C
from semidirect.core import is_quotient
from semidirect.report import CheckReport
from semidirect.verify import REGISTRY, InstanceGen, resolve, run_suite, suite_ids
from semidirect.verify.catalog import all_matroids
from semidirect.verify.generators import SOURCES, labels, sub_seed

CORE_IDS = {
    "semidirect_union",
    "semidirect_intersection",
    "rank_additivity_and_dual",
    "union_quotients",
    "union_minors",
    "union_weak_monotone",
    "IBC_circuits",
    "principal_rank",
    "principal_independents",
    "region_ideal_filter",
    "principal_dual",
    "principal_minors",
    "principal_closure_flats",
    "principal_cyclic_flats",
    "principal_circuits",
    "principal_cyclic_sets",
    "dirsum_criterion",
    "connectivity",
    "equality_criterion",
    "union_freedom",
    "associativity",
    "higgs",
    "weak_interval",
    "transversal_transfer",
    "counterexamples",
}


def test_registry_contents_and_resolution():
    assert CORE_IDS <= set(REGISTRY)
    assert resolve("check_principal_dual") is resolve("principal_dual")
    assert suite_ids("all") == list(REGISTRY)
    assert suite_ids(["check_higgs", "axioms"]) == ["higgs", "axioms"]
    with pytest.raises(KeyError):
        resolve("no_such_check")
    import semidirect.verify as V

    assert V.check_principal_dual is REGISTRY["principal_dual"].run
    assert all(REGISTRY[t].doc for t in REGISTRY)


def test_report_contract():
    with pytest.raises(ValueError):
        CheckReport("x", "fail")
    with pytest.raises(ValueError):
        CheckReport("x", "pass", witness={})
    with pytest.raises(ValueError):
        CheckReport("x", "maybe")
    r = CheckReport("x", "pass", 3, seed=1, notes=["n"])
    assert r.passed and bool(r)
    assert json.loads(r.to_json()) == {"theorem": "x", "status": "pass", "instances": 3, "seed": 1, "witness": None, "notes": ["n"]}


def test_reports_are_deterministic():
    ids = ["principal_dual", "union_minors", "transversal_transfer"]
    first = [r.to_json() for r in run_suite(ids, seed=5, count=20)]
    second = [r.to_json() for r in run_suite(ids, seed=5, count=20)]
    assert first == second
    # a check's report does not depend on what ran before it
    alone = next(run_suite("union_minors", seed=5, count=20)).to_json()
    assert alone == first[1]


def test_parallel_run_matches_serial():
    ids = ["principal_rank", "higgs", "union_quotients", "principal_circuits"]
    serial = [r.to_json() for r in run_suite(ids, seed=3, count=15)]
    parallel = [r.to_json() for r in run_suite(ids, seed=3, count=15, jobs=2)]
    assert serial == parallel


def test_sub_seeds_differ_by_name():
    assert sub_seed(0, "a") != sub_seed(0, "b")
    a = InstanceGen(sub_seed(1, "x")).matroid(labels("e", 4))
    b = InstanceGen(sub_seed(1, "x")).matroid(labels("e", 4))
    assert a == b


@given(st.integers(0, 2**32 - 1), st.sampled_from(SOURCES))
def test_generator_contracts(seed, source):
    gen = InstanceGen(seed, max_n=5)
    E = labels("e", gen.size(0, 5))
    M = gen.matroid(E, source)
    assert list(M.labels) == E
    Q, L = gen.quotient_pair(E)
    assert is_quotient(Q, L)
    U = C.uniform(2, ["a", "b", "c"])
    K = gen.rank_preserving_extension(U, ["d", "e", "f"])
    assert K.labels == ("a", "b", "c", "d", "e", "f")
    assert K.rank() == 2 and K.restrict(["a", "b", "c"]) == U
    spec = gen.principal_spec()
    assert set(spec.M.labels).isdisjoint(spec.N.labels)


def test_catalog_counts():
    # numbers of matroids on n labelled points
    for n, count in enumerate([1, 2, 5, 16, 68, 406]):
        assert len(all_matroids(labels("e", n))) == count


def test_broken_construction_yields_witness(monkeypatch):
    monkeypatch.setattr(C, "principal_sum_by_higgs", lambda M, N, A, B: C.direct_sum(M, N))
    report = REGISTRY["principal_rank"].run(seed=0, count=200)
    assert not report.passed
    assert report.witness is not None and "instance_index" in report.witness
    json.dumps(report.to_dict())


def test_broken_union_yields_witness(monkeypatch):
    real = C.union
    monkeypatch.setattr(C, "union", lambda G, H: C.truncation(real(G, H), max(real(G, H).rank() - 1, 0)))
    report = REGISTRY["semidirect_union"].run(seed=0, count=50)
    assert not report.passed and report.witness


def test_small_full_run_passes():
    reports = list(run_suite("all", seed=11, count=5, max_n=3))
    assert [r.theorem_id for r in reports] == list(REGISTRY)
    failed = [r.to_dict() for r in reports if not r.passed]
    assert not failed
