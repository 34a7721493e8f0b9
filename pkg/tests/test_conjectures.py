import json
import random

import pytest
from hypothesis import given, strategies as st

from orbitkit.conjectures import (
    SO_ODD_SUPERCUSPIDAL,
    Verdict,
    bound_from_arthur,
    bound_from_dual_lparam,
    check_bound,
    dbv_by_oracle,
    examples_report,
    reproduce_paper_examples,
    sharper_chain_check,
    so_odd_supercuspidal_partition,
    so_odd_triple_closed_form,
    so_odd_triple_parameter,
    so_odd_triple_partition,
)
from orbitkit.duality import dbv
from orbitkit.errors import PreconditionViolated, SizeMismatch, TypeMismatch
from orbitkit.params import Context, hat, p_of_phi, parse_parameter, phi_of_psi
from orbitkit.partition import Partition, is_type, parse_partition
from orbitkit.verify import random_arthur_parameter

P = parse_partition
PHI_HAT_PI = parse_parameter("2*rho(1)@3 S1 + rho(1) S1 + rho(1) S3 + rho(1) S5")
PSI_HATS = [parse_parameter(t) for t in (
    "rho(1) S7 S1 + rho(1) S2 S2",
    "rho(1) S7 S1 + rho(1) S1 S1 + rho(1) S1 S3",
    "rho(1) S7 S1 + rho(1) S3 S1 + rho(1) S1 S1",
)]


def test_sp10_bounds():
    assert bound_from_dual_lparam(PHI_HAT_PI, "B") == P("[4,2,2,2]")
    assert [bound_from_arthur(psi, "B") for psi in PSI_HATS] == [P("[8,2]"), P("[8,2]"), P("[10]")]
    for psi in PSI_HATS:
        assert sharper_chain_check(PHI_HAT_PI, psi, "B")


def test_bound_type_guard():
    with pytest.raises(TypeMismatch):
        bound_from_dual_lparam(parse_parameter("rho(1) S2"), "B")


def test_generic_bound_is_regular():
    phi = parse_parameter("rho(1) S1 + rho(2) S1 + rho(2) S1 + rho(2) S1")
    assert bound_from_dual_lparam(phi, "B") == P("[6]")


def test_so_odd_family_bound():
    phi = so_odd_triple_parameter(1, 2, 3)
    assert bound_from_dual_lparam(phi, "C") == P("[3,3,3,1,1,1,1]")


def test_check_bound_verdicts():
    r = check_bound([P("[4,2,2,2]")], P("[8,2]"))
    assert r.all_satisfied and r.candidates[0][1] is Verdict.LEQ
    r = check_bound([P("[10]")], P("[4,2,2,2]"))
    assert r.candidates[0][1] is Verdict.VIOLATES and not r.all_satisfied
    r = check_bound([P("[3,3]")], P("[4,1,1]"))
    assert r.candidates[0][1] is Verdict.INCOMPARABLE
    assert check_bound([], P("[4]")).all_satisfied


def test_check_bound_guards():
    with pytest.raises(SizeMismatch):
        check_bound([P("[3]")], P("[4]"))
    with pytest.raises(PreconditionViolated):
        check_bound([], P("[3,1]"), "B")


@given(st.permutations([P("[4,2,2,2]"), P("[10]"), P("[6,2,2]"), P("[5,5]")]))
def test_verdicts_stable_under_permutation(cands):
    verdicts = dict(check_bound(cands, P("[8,2]")).candidates)
    assert verdicts == dict(check_bound(sorted(cands, key=lambda p: p.parts), P("[8,2]")).candidates)


def test_report_json():
    payload = check_bound([P("[10]")], P("[8,2]")).to_json()
    assert payload["candidates"][0]["verdict"] == "violates"
    assert payload["all_satisfied"] is False


def test_chain_precondition():
    # p(phi) = [1^11] lies below p(phi of psi hat) = [2,2,1^7]
    generic = parse_parameter("rho(11) S1")
    with pytest.raises(PreconditionViolated):
        sharper_chain_check(generic, PSI_HATS[0], "B")


def test_chain_equality_case():
    # anti-tempered psi: phi_pi_hat taken to be phi of psi hat
    psi = parse_parameter("rho(1) S1 S5 + rho(1) S1 S3 + rho(1) S1 S1")
    phi = phi_of_psi(hat(psi))
    assert sharper_chain_check(phi, psi, "B")
    assert bound_from_dual_lparam(phi, "B") == bound_from_arthur(psi, "B")


@given(st.integers(0, 5000))
def test_chain_random(seed):
    rng = random.Random(seed)
    psi = random_arthur_parameter(rng, 11)
    if psi.ambient_dim % 2 == 0:
        return
    phi = phi_of_psi(hat(psi))
    if not is_type(p_of_phi(phi), "B"):
        return
    assert sharper_chain_check(phi, psi, "B")


def test_golden_suite_passes():
    results = reproduce_paper_examples()
    assert results and all(r.passed for r in results), [r for r in results if not r.passed]
    ids = [r.example_id for r in results]
    assert len(ids) == len(set(ids))
    payload = json.loads(examples_report(results))
    assert set(payload[0]) == {"example_id", "expected", "computed", "pass"}


@pytest.mark.parametrize("a1, a2, a3", [(1, 2, 3), (2, 3, 5), (1, 3, 4), (2, 4, 6), (3, 4, 5)])
def test_so_odd_triple_family(a1, a2, a3):
    shape = so_odd_triple_partition(a1, a2, a3)
    assert is_type(shape, "C")
    assert p_of_phi(so_odd_triple_parameter(a1, a2, a3)) == shape
    assert dbv(shape, "C") == so_odd_triple_closed_form(a1, a2, a3)


def test_so_odd_235_values():
    assert so_odd_triple_partition(2, 3, 5) == P("[6,4,3,3,2,1,1]")
    assert dbv(P("[6,4,3,3,2,1,1]"), "C") == P("[7,5,5,1,1,1,1]")


@pytest.mark.parametrize("pair, expected", [
    ((1, 1), "[3,1,1]"),
    ((2, 1), "[3,3,1,1,1]"),
    ((3, 2), "[5,5,3,3,1,1,1]"),
])
def test_so_odd_supercuspidal_frozen(pair, expected):
    p = so_odd_supercuspidal_partition(*pair)
    assert dbv(p, "C") == P(expected)
    assert dbv_by_oracle(p, "C") == P(expected)
    assert pair in SO_ODD_SUPERCUSPIDAL


def test_dbv_by_oracle_agrees():
    for text, X in [("[5,3,1,1,1]", "B"), ("[4,4]", "D"), ("[3,1]", "A"), ("[2,2,1,1]", "C")]:
        assert dbv_by_oracle(P(text), X) == dbv(P(text), X)
