import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pelastica import elliptic as ell
from pelastica._errors import DomainError
from pelastica.verify import oracle_integral

from conftest import P_GRID, beta_cos_integral

KINDS = ("F1", "F2", "E1", "E2")
ps = st.sampled_from(P_GRID + (1.1, 2.5, 10.0))
qs = st.floats(0.0, 0.99)
xs = st.floats(-12.0, 12.0)


# ---------------------------------------------------------------- integrals


def test_integral_trivial_values():
    assert ell.integral("F1", 1.5, 0.0, 0.5) == 0.0
    assert ell.integral("F1", 2.0, math.pi / 2, 0.0) == pytest.approx(math.pi / 2, abs=1e-15)
    assert ell.complete("F1", 2.0, 0.0) == pytest.approx(math.pi / 2, abs=1e-15)


def test_complete_first_kind_against_mpmath(frozen):
    assert ell.complete("F1", 1.5, 0.5) == pytest.approx(frozen["K1_p1.5_q0.5"], rel=1e-14)
    assert ell.integral("F1", 1.5, math.pi / 2, 0.5) == pytest.approx(frozen["K1_p1.5_q0.5"], rel=1e-14)


def test_period_shift_of_second_kind(frozen):
    direct = ell.integral("E2", 3, math.pi + 0.3, 0.7)
    reduced = ell.integral("E2", 3, 0.3, 0.7) + 2 * ell.complete("E2", 3, 0.7)
    assert direct == pytest.approx(reduced, rel=1e-14)
    assert direct == pytest.approx(frozen["E2_p3_xpi+0.3_q0.7"], rel=1e-14)
    assert ell.complete("E2", 3, 0.7) == pytest.approx(frozen["E2c_p3_q0.7"], rel=1e-14)


def test_divergent_complete_integral():
    assert ell.complete("F1", 1.5, 1.0) == math.inf
    assert ell.complete("F1", 2.0, 1.0) == math.inf
    with pytest.raises(DomainError):
        ell.integral("F1", 1.5, 2.0, 1.0)


@pytest.mark.parametrize("p", [3, 4, 6, 10])
def test_kp1_beta_identity(p, frozen):
    assert ell.complete("F1", p, 1.0) == pytest.approx(beta_cos_integral(-2 / p), rel=1e-13)
    assert ell.complete("F1", p, 1.0) == pytest.approx(frozen["Kp1"][p], rel=1e-14)
    assert ell.complete("E1", p, 1.0) == pytest.approx(frozen["E1p1"][p], rel=1e-14)


def test_kp1_closed_form_p4():
    p = 4.0
    want = 0.5 * math.sqrt(math.pi) * math.gamma((p - 2) / (2 * p)) / math.gamma((p - 1) / p)
    assert ell.complete("F1", p, 1.0) == pytest.approx(want, rel=1e-14)


@pytest.mark.parametrize("kind", KINDS)
def test_array_input_matches_scalar(kind):
    x = np.linspace(-7, 7, 11)
    vec = ell.integral(kind, 2.5, x, 0.6)
    assert vec.shape == x.shape
    for xi, vi in zip(x, vec):
        assert ell.integral(kind, 2.5, float(xi), 0.6) == pytest.approx(vi, rel=1e-15, abs=1e-15)


def test_bad_arguments():
    with pytest.raises(DomainError):
        ell.integral("F1", 1.0, 0.3, 0.5)
    with pytest.raises(DomainError):
        ell.integral("F1", 2.0, 0.3, 1.2)
    with pytest.raises(DomainError):
        ell.integral("G7", 2.0, 0.3, 0.5)
    with pytest.raises(DomainError):
        ell.integral("E1", 2.0, math.nan, 0.5)


@settings(max_examples=60, deadline=None)
@given(kind=st.sampled_from(KINDS), p=ps, x=xs, q=qs)
def test_integral_matches_scipy_oracle(kind, p, x, q):
    assert ell.integral(kind, p, x, q) == pytest.approx(oracle_integral(kind, p, x, q), rel=1e-10, abs=1e-10)


@settings(max_examples=40, deadline=None)
@given(kind=st.sampled_from(KINDS), p=ps, x=xs, q=qs)
def test_integral_odd_and_quasi_periodic(kind, p, x, q):
    f = ell.integral(kind, p, x, q)
    assert ell.integral(kind, p, -x, q) == pytest.approx(-f, abs=1e-13)
    shifted = ell.integral(kind, p, x + math.pi, q)
    assert shifted == pytest.approx(f + 2 * ell.complete(kind, p, q), rel=1e-12, abs=1e-12)


# ---------------------------------------------------------------- amplitude


def test_amplitude_trivial_values():
    assert ell.amplitude(1, 3, 0.0, 0.4) == 0.0
    K = ell.complete("F1", 2.5, 0.3)
    assert ell.amplitude(1, 2.5, K, 0.3) == pytest.approx(math.pi / 2, abs=1e-14)


def test_amplitude_second_kind_against_mpmath(frozen):
    a = ell.amplitude(2, 1.5, 2.0, 0.6)
    assert a == pytest.approx(frozen["am2_p1.5_x2_q0.6"], rel=1e-13)
    assert ell.integral("F2", 1.5, a, 0.6) == pytest.approx(2.0, rel=1e-14)


@settings(max_examples=60, deadline=None)
@given(which=st.sampled_from((1, 2)), p=ps, x=xs, q=qs)
def test_amplitude_inverts_first_kind(which, p, x, q):
    a = ell.amplitude(which, p, x, q)
    assert ell.integral(f"F{which}", p, a, q) == pytest.approx(x, abs=1e-11 * max(1.0, abs(x)))


@settings(max_examples=30, deadline=None)
@given(p=st.sampled_from((1.2, 1.5, 2.0)), x=st.floats(-30.0, 30.0))
def test_amplitude_at_q1_small_p_is_bounded(p, x):
    a = ell.amplitude(1, p, x, 1.0)
    assert -math.pi / 2 <= a <= math.pi / 2


def test_amplitude_monotone_on_a_grid():
    x = np.linspace(-20, 20, 2001)
    for which in (1, 2):
        a = ell.amplitude(which, 4 / 3, x, 0.9)
        assert np.all(np.diff(a) > 0)


# ---------------------------------------------------------------- sn, cn, dn


def test_sn_cn_trivial_values():
    assert ell.sn_cn(3, 0.0, 0.5) == (0.0, 1.0)
    sn, cn = ell.sn_cn(3, ell.complete("F1", 3, 0.5), 0.5)
    assert sn == pytest.approx(1.0, abs=1e-15)
    assert cn == pytest.approx(0.0, abs=1e-10)


def test_sn_cn_antiperiod():
    K = ell.complete("F1", 1.5, 0.7)
    x0 = np.linspace(-3, 3, 37)
    sn0, cn0 = ell.sn_cn(1.5, x0, 0.7)
    sn1, cn1 = ell.sn_cn(1.5, x0 + 2 * K, 0.7)
    np.testing.assert_allclose(sn1, -sn0, atol=1e-12)
    np.testing.assert_allclose(cn1, -cn0, atol=1e-12)


def test_cn_even_sn_odd():
    x = np.linspace(0.1, 5, 20)
    sp, cp = ell.sn_cn(2.5, x, 0.4)
    sm, cm = ell.sn_cn(2.5, -x, 0.4)
    np.testing.assert_allclose(sm, -sp, atol=1e-15)
    np.testing.assert_allclose(cm, cp, atol=1e-15)


def test_dn_values_and_period():
    assert ell.dn(4, 0.0, 0.9) == 1.0
    K2 = ell.complete("F2", 4, 0.9)
    assert ell.dn(4, K2, 0.9) == pytest.approx((1 - 0.81) ** 0.25, rel=1e-13)
    K2 = ell.complete("F2", 2.5, 0.6)
    x0 = np.linspace(-2, 2, 21)
    np.testing.assert_allclose(ell.dn(2.5, x0 + 2 * K2, 0.6), ell.dn(2.5, x0, 0.6), rtol=1e-12)


def test_dn_decreases_on_quarter_period():
    K2 = ell.complete("F2", 3, 0.8)
    d = ell.dn(3, np.linspace(0, K2, 200), 0.8)
    assert np.all(np.diff(d) < 0)


@settings(max_examples=60, deadline=None)
@given(p=ps, x=xs, q=qs)
def test_sn_cn_identity(p, x, q):
    sn, cn = ell.sn_cn(p, x, q)
    assert sn**2 + abs(cn) ** p == pytest.approx(1.0, abs=1e-12)


# ---------------------------------------------------------------- classical reduction


@pytest.mark.parametrize("x", [0.3, 1.1, 2.9, -4.0])
@pytest.mark.parametrize("q", [0.2, 0.8, 0.99])
def test_p2_reduces_to_jacobi(x, q):
    from scipy.special import ellipj

    sn, cn, dn_, _ = ellipj(x, q * q)
    got_sn, got_cn = ell.sn_cn(2.0, x, q)
    assert got_sn == pytest.approx(sn, abs=1e-12)
    assert got_cn == pytest.approx(cn, abs=1e-12)
    assert ell.dn(2.0, x, q) == pytest.approx(dn_, abs=1e-12)


# ---------------------------------------------------------------- sech, tanh


def test_sech_values(frozen):
    assert ell.sech(3, 0.0) == 1.0
    assert ell.sech(3, ell.complete("F1", 3, 1.0)) == 0.0
    small = ell.sech(1.5, 10.0)
    assert small > 0
    assert small == pytest.approx(frozen["sech_1.5_10"], rel=1e-10)


def test_sech_compact_support_only_above_two():
    K = ell.complete("F1", 4, 1.0)
    x = np.array([K * 1.001, 5 * K, -3 * K])
    np.testing.assert_array_equal(ell.sech(4, x), 0.0)
    assert np.all(ell.sech(2.0, np.array([5.0, 20.0])) > 0)


def test_tanh_values():
    K = ell.complete("F1", 4, 1.0)
    E = ell.complete("E1", 4, 1.0)
    assert ell.tanh(4, 0.0) == 0.0
    assert ell.tanh(4, K) == pytest.approx(E, rel=1e-14)
    assert ell.tanh(4, 2 * K) == pytest.approx(E, rel=1e-14)
    assert ell.tanh(4, -2 * K) == pytest.approx(-E, rel=1e-14)


def test_tanh_is_integral_of_sech_power():
    from scipy.integrate import quad

    for p in (1.5, 3.0):
        x = 1.3
        want, _ = quad(lambda t: ell.sech(p, t) ** p, 0.0, x, epsabs=1e-13)
        assert ell.tanh(p, x) == pytest.approx(want, rel=1e-11)


# ---------------------------------------------------------------- regularity constants


@pytest.mark.parametrize(
    "p, m, r, M, R",
    [(2.0, 1, None, None, None), (4 / 3, 3, None, None, None), (3.0, 1, 2.0, 2, None),
     (1.5, 2, None, None, None), (2.5, 1, 1 / (1 - 1 / 1.5), 4, None), (5.0, 1, 1 / (1 - 0.25), 1, 1 / (1 - 2 / 3))],
)
def test_pparams(p, m, r, M, R):
    pp = ell.pparams(p)
    assert pp.m_p == m and pp.M_p == M
    assert (pp.r_p is None) == (r is None) and (pp.R_p is None) == (R is None)
    if r is not None:
        assert pp.r_p == pytest.approx(r)
    if R is not None:
        assert pp.R_p == pytest.approx(R)
    assert pp.conjugate == pytest.approx(p / (p - 1))
