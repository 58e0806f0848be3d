"""Acceptance criteria, one test each, at the stated counts and time limits.

Every test records a PASS/FAIL line; conftest prints them all at the end of
the session so they show up in captured runs too.
"""

import os
import shutil
import subprocess
import sys
import time

from semidirect import constructions as C
from semidirect.transversal import is_fundamental_transversal, is_transversal
from semidirect.verify import REGISTRY
from semidirect.verify import fixtures as F
from semidirect.verify.checks_principal import _standard_higgs_pair
from semidirect.verify.generators import InstanceGen, sub_seed

SEED = 0
RESULTS = []


def record(number, name, ok, elapsed, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {name} ({elapsed:.1f}s){'  ' + detail if detail else ''}"
    RESULTS.append(line)
    print(line)


def run_checks(ids, counts):
    """Run registered checks at explicit counts; return (all passed, reports, seconds)."""
    start = time.perf_counter()
    reports = [REGISTRY[tid].run(seed=SEED, count=counts[tid]) for tid in ids]
    elapsed = time.perf_counter() - start
    for r in reports:
        assert r.instances_run >= counts[r.theorem_id] or r.theorem_id in ("counterexamples", "fixtures")
    return all(r.passed for r in reports), reports, elapsed


def failures(reports):
    return "; ".join(f"{r.theorem_id}: {r.witness}" for r in reports if not r.passed)


def shared_corpus(count=500, max_n=5):
    gen = InstanceGen(sub_seed(SEED, "acceptance_corpus"), max_n=max_n)
    return [gen.principal_spec() for _ in range(count)]


def test_criterion_1_axioms():
    ok, reports, t = run_checks(["axioms"], {"axioms": 2000})
    record(1, "rank axioms on 2000 seeded matroids, n <= 6, < 30 s", ok and t < 30, t)
    assert ok, failures(reports)
    assert t < 30


def test_criterion_2_three_routes():
    start = time.perf_counter()
    mismatches = 0
    for spec in shared_corpus():
        M, N, A, B = spec.M, spec.N, spec.A, spec.B
        P = C.principal_sum(M, N, A, B)
        if C.principal_sum_by_union(M, N, A, B) != P or C.principal_sum_by_higgs(M, N, A, B) != P:
            mismatches += 1
    ok_rank, reports, _ = run_checks(["principal_rank"], {"principal_rank": 500})
    t = time.perf_counter() - start
    ok = mismatches == 0 and ok_rank and t < 120
    record(2, "formula = union route = Higgs route on 500 specs, < 2 min", ok, t, f"{mismatches} mismatches")
    assert mismatches == 0 and ok_rank, failures(reports)
    assert t < 120


def test_criterion_3_duality():
    start = time.perf_counter()
    mismatches = 0
    for spec in shared_corpus():
        M, N, A, B = spec.M, spec.N, spec.A, spec.B
        P = spec.build()
        if C.principal_sum(N.dual(), M.dual(), B, A) != P.dual().reorder(N.labels + M.labels):
            mismatches += 1
            continue
        Q, L = _standard_higgs_pair(M, N, A, B)
        gap = L.rank() - Q.rank()
        for i in range(gap + 1):
            if C.higgs_lift(L.dual(), Q.dual(), gap - i) != C.higgs_lift(Q, L, i).dual():
                mismatches += 1
                break
    ok_dual, reports, _ = run_checks(["principal_dual"], {"principal_dual": 500})
    t = time.perf_counter() - start
    ok = mismatches == 0 and ok_dual
    record(3, "principal-sum duality and Higgs duality on the same 500 specs", ok, t, f"{mismatches} mismatches")
    assert ok, failures(reports)


def test_criterion_4_structure():
    ids = ["principal_closure_flats", "principal_cyclic_flats", "principal_circuits", "principal_cyclic_sets"]
    ok, reports, t = run_checks(ids, dict.fromkeys(ids, 300))
    record(4, "flats, cyclic flats, circuits, cyclic sets on 300 specs, < 5 min", ok and t < 300, t)
    assert ok, failures(reports)
    assert t < 300


def test_criterion_5_semidirect_contract():
    ids = ["semidirect_union", "semidirect_intersection", "higgs"]
    ok, reports, t = run_checks(ids, dict.fromkeys(ids, 500))
    record(5, "K|S = M and K/S = N for union, intersection and Higgs routes, 500 each", ok, t)
    assert ok, failures(reports)


def test_criterion_6_fixtures_and_counterexamples():
    ok, reports, t = run_checks(["fixtures", "counterexamples"], {"fixtures": 1, "counterexamples": 1})
    detail = ", ".join(f"{r.theorem_id}: {r.instances_run} cases" for r in reports)
    record(6, "fixtures reproduce; exhaustive non-example searches", ok, t, detail)
    assert ok, failures(reports)


def test_criterion_7_transversal():
    ids = ["transversal_oracles", "transversal_transfer"]
    ok, reports, t = run_checks(ids, {"transversal_oracles": 300, "transversal_transfer": 200})
    start = time.perf_counter()
    t3_fails = not is_transversal(F.three_pairs_truncated()).passed
    free_ok = is_fundamental_transversal(F.three_pairs_free_extension()).passed
    t += time.perf_counter() - start
    all_ok = ok and t3_fails and free_ok
    record(7, "Mason-Ingleton vs search on 300 systems; transfer on 200; fixtures", all_ok, t)
    assert ok, failures(reports)
    assert t3_fails and free_ok


def test_criterion_8_linear():
    ids = ["linear_block", "linear_generic_union"]
    ok, reports, t = run_checks(ids, {"linear_block": 200, "linear_generic_union": 1000})
    notes = "; ".join(n for r in reports for n in r.notes)
    record(8, "block matrices over GF(2^31 - 1); generic union >= 99% of 1000", ok, t, notes)
    assert ok, failures(reports)


def test_criterion_9_full_suite():
    exe = shutil.which("semidirect")
    cmd = [exe] if exe else [sys.executable, "-m", "semidirect.cli"]
    jobs = str(min(8, os.cpu_count() or 1))
    start = time.perf_counter()
    proc = subprocess.run(cmd + ["verify", "--suite", "all", "--jobs", jobs], capture_output=True, text=True, timeout=900)
    t = time.perf_counter() - start
    lines = proc.stdout.strip().splitlines()
    ok = proc.returncode == 0 and t < 900 and len(lines) == len(REGISTRY)
    record(9, f"verify --suite all exits 0 in < 15 min ({jobs} jobs)", ok, t, f"{len(lines)} checks")
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert len(lines) == len(REGISTRY)
    assert t < 900

