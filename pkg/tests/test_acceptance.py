"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import time

import pytest

from orbitkit import verify
from orbitkit.conjectures import reproduce_paper_examples
from orbitkit.duality import key_lemma_sweep


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {title}: {detail}")
    return emit


def test_criterion_1_golden_examples(report):
    start = time.perf_counter()
    results = reproduce_paper_examples()
    elapsed = time.perf_counter() - start
    failed = [r.example_id for r in results if not r.passed]
    ids = {r.example_id for r in results}
    required = {"sp10/bound_phi", "sp10/bound_psi1", "sp10/bound_psi2", "sp10/bound_psi3",
                "sp10/strictly_larger_psi1", "sp10/strictly_larger_psi2", "sp10/strictly_larger_psi3",
                "gl_division/phi_pi/p", "gl_division/phi_pi/p_A",
                "gl_division/phi_hat_pi/p", "gl_division/phi_hat_pi/p_A",
                "so_odd/triple/1,2,3/dbv", "so_odd/triple/2,3,5/dbv", "so_odd/triple/1,3,4/dbv"}
    ok = not failed and required <= ids and elapsed < 1.0
    report(1, "golden examples", ok, f"{len(results) - len(failed)}/{len(results)} exact, {elapsed:.3f}s")
    assert required <= ids
    assert not failed, failed
    assert elapsed < 1.0


def test_criterion_2_collapse_matches_oracle(report):
    start = time.perf_counter()
    res = verify.check_collapse_oracle(14)
    elapsed = time.perf_counter() - start
    report(2, "collapse = oracle, |p| <= 14", res.ok and elapsed < 120, f"{res}, {elapsed:.2f}s")
    assert res.ok, res.failures
    assert elapsed < 120


def test_criterion_3_key_lemma_sweep(report):
    start = time.perf_counter()
    summary = key_lemma_sweep(14, 5, 3, jobs=4)
    elapsed = time.perf_counter() - start
    report(3, "key lemma sweep (14, 5, 3)", summary.ok and elapsed < 600,
           f"{summary}, {summary.exceptional_cases} exceptional, {elapsed:.2f}s")
    assert summary.ok, summary.counterexamples[:5]
    assert summary.cases_checked > 0 and summary.exceptional_cases > 0
    assert elapsed < 600


def test_criterion_4_dbv_properties(report):
    cube = verify.check_dbv_cube(16)
    order = verify.check_dbv_order_reversal(12)
    ok = cube.ok and order.ok
    report(4, "dbv^3 = dbv and order reversal", ok, f"{cube}; {order}")
    assert cube.ok, cube.failures
    assert order.ok, order.failures


def test_criterion_5_injectivity_and_strict_inequality(report):
    inj = verify.check_injectivity(12, 2)
    inj3 = verify.check_injectivity(12, 3)
    strict = verify.check_strict_inequality(12, 4, 2)
    ok = inj.ok and inj3.ok and strict.ok and strict.cases > 0
    report(5, "injectivity and strict inequality", ok, f"{inj}; d <= 3: {inj3.cases} cases ok={inj3.ok}; {strict}")
    assert inj.ok and inj3.ok, inj.failures + inj3.failures
    assert strict.ok and strict.cases > 0, strict.failures


def test_criterion_6_structural_identities(report):
    inv = verify.check_transpose_involution(16)
    union = verify.check_union_transpose(14)
    pp = verify.check_p_psi_identity(10_000, 12, seed=2024)
    ok = inv.ok and union.ok and pp.ok and pp.cases == 10_000
    report(6, "structural identities", ok, f"{inv}; {union}; {pp}")
    assert inv.ok and union.ok
    assert pp.ok and pp.cases == 10_000, pp.failures


def test_criterion_7_gl_wavefront(report):
    speh = verify.check_gl_speh(4, 4, 4)
    modules = verify.check_gl_wavefront(1000, seed=2024)
    ok = speh.ok and modules.ok and speh.cases == 64 and modules.cases == 1000
    report(7, "GL wavefront formula", ok, f"{speh}; {modules}")
    assert speh.ok and speh.cases == 64
    assert modules.ok and modules.cases == 1000, modules.failures
