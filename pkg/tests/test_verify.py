import random

from orbitkit import verify


def test_small_checkers_are_clean():
    for res in (
        verify.check_collapse_oracle(8),
        verify.check_dbv_cube(8),
        verify.check_dbv_order_reversal(6),
        verify.check_injectivity(6, 2),
        verify.check_strict_inequality(6, 2, 1),
        verify.check_transpose_involution(8),
        verify.check_union_transpose(6),
        verify.check_p_psi_identity(200, 8),
        verify.check_gl_speh(2, 2, 2),
        verify.check_gl_wavefront(50),
        verify.check_collapse_splitting(10),
    ):
        assert res.ok and res.cases > 0, str(res)


def test_check_result_caps_witnesses():
    res = verify.CheckResult("demo")
    for i in range(verify.MAX_WITNESSES + 5):
        res.record(False, i)
    res.record(True)
    assert res.failure_count == verify.MAX_WITNESSES + 5
    assert len(res.failures) == verify.MAX_WITNESSES
    assert res.cases == verify.MAX_WITNESSES + 6
    assert str(res) == f"demo: {verify.MAX_WITNESSES + 5} failures / {verify.MAX_WITNESSES + 6} cases"


def test_random_generators_respect_bounds():
    rng = random.Random(7)
    for _ in range(300):
        psi = verify.random_arthur_parameter(rng, 12)
        assert 1 <= psi.ambient_dim <= 12
        factors, d_A = verify.random_standard_module(rng)
        assert 1 <= d_A <= 4
        assert all(d_A % s == 0 for *_, s in factors)
        twists = sorted(x for _, _, x, _ in factors)
        assert twists == sorted(-x for x in twists)


def test_collapse_splitting_exhaustive():
    assert verify.check_collapse_splitting(14).ok
