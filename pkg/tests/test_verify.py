import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pelastica import elliptic as ell
from pelastica._errors import DomainError, FitError, ToleranceError
from pelastica.classify import Circular, FlatCoreSpec, Linear, canonical_class, curvature_of, curvature_zeros
from pelastica.curves import trace_family, trace_flatcore
from pelastica.verify import (
    TestFunction,
    agm_incomplete,
    agm_jacobi,
    class_weak_residual,
    class_window,
    conservation_drift,
    exponent_probe,
    first_variation,
    oracle_integral,
    oracle_quadrature,
    probe_report,
    random_perturbations,
    random_test_functions,
    run_suite,
    strong_residual,
    trace_weak_residual,
    weak_residual,
)

from conftest import P_GRID, beta_cos_integral


# ---------------------------------------------------------------- oracles


def test_oracle_quadrature_examples():
    assert oracle_quadrature(lambda t: 1.0, 0.0, math.pi / 2) == pytest.approx(math.pi / 2, abs=1e-14)
    # cos^(-1/3) on [0, pi/2] as a smooth factor times (pi/2 - t)^(-1/3)
    val = oracle_quadrature(lambda t: (math.cos(t) / (math.pi / 2 - t)) ** (-1 / 3) if t < math.pi / 2 else 1.0,
                            0.0, math.pi / 2, beta=-1 / 3)
    assert val == pytest.approx(beta_cos_integral(-1 / 3), rel=1e-12)
    assert oracle_quadrature(math.sin, 1.0, 1.0) == 0.0


def test_oracle_quadrature_errors():
    with pytest.raises(DomainError):
        oracle_quadrature(math.sin, 0, 1, alpha=-1.0)
    with pytest.raises(ToleranceError):
        oracle_quadrature(lambda t: math.sin(1e4 * t) * t**-0.9, 0.0, 1.0, tol=1e-15)


def test_oracle_matches_agm_at_p2():
    F, E = agm_incomplete(math.pi / 3, 0.8)
    assert oracle_integral("F1", 2, math.pi / 3, 0.8) == pytest.approx(F, rel=1e-12)
    assert oracle_integral("F2", 2, math.pi / 3, 0.8) == pytest.approx(F, rel=1e-12)
    assert oracle_integral("E1", 2, math.pi / 3, 0.8) == pytest.approx(E, rel=1e-12)


def test_agm_against_scipy():
    from scipy.special import ellipeinc, ellipj, ellipkinc

    for phi, q in [(0.3, 0.1), (1.4, 0.9), (4.0, 0.5), (-2.2, 0.99)]:
        F, E = agm_incomplete(phi, q)
        assert F == pytest.approx(ellipkinc(phi, q * q), rel=1e-13)
        assert E == pytest.approx(ellipeinc(phi, q * q), rel=1e-13)
    for u, q in [(0.4, 0.3), (2.5, 0.95), (-7.0, 0.6)]:
        am, sn, cn, dn = agm_jacobi(u, q)
        want = ellipj(u, q * q)
        np.testing.assert_allclose([sn, cn, dn, am], [want[0], want[1], want[2], want[3]], atol=1e-13)


def test_agm_modulus_one():
    F, E = agm_incomplete(0.7, 1.0)
    assert F == pytest.approx(math.atanh(math.sin(0.7)))
    assert E == pytest.approx(math.sin(0.7))
    _, sn, cn, _ = agm_jacobi(1.3, 1.0)
    assert (sn, cn) == pytest.approx((math.tanh(1.3), 1 / math.cosh(1.3)))


def test_oracle_independent_on_grid():
    rng = np.random.default_rng(11)
    for _ in range(100):
        kind = rng.choice(["F1", "F2", "E1", "E2"])
        p = float(rng.choice(P_GRID))
        q = float(rng.uniform(0, 0.99))
        x = float(rng.uniform(-6, 6))
        assert ell.integral(kind, p, x, q) == pytest.approx(oracle_integral(kind, p, x, q), abs=1e-9, rel=1e-9)


# ---------------------------------------------------------------- test functions


def test_bump_vanishes_to_second_order():
    phi = TestFunction(1.0, 2.5, (1.0, -0.3, 0.2))
    assert phi.degree >= 6
    for d in (0, 1, 2):
        np.testing.assert_allclose(phi(np.array([1.0, 2.5, 0.5, 3.0]), d), 0.0, atol=1e-14)
    with pytest.raises(DomainError):
        TestFunction(1.0, 1.0)


def test_bump_derivatives_by_finite_differences():
    phi = TestFunction(0.0, 2.0, (0.5, 1.0))
    s = np.linspace(0.2, 1.8, 9)
    h = 1e-5
    np.testing.assert_allclose(phi(s, 1), (phi(s + h) - phi(s - h)) / (2 * h), atol=1e-8)
    np.testing.assert_allclose(phi(s, 2), (phi(s + h, 1) - phi(s - h, 1)) / (2 * h), atol=1e-7)


def test_random_bumps_inside_interval():
    for phi in random_test_functions(-1.0, 3.0, n=20, seed=4):
        assert -1.0 < phi.a < phi.b < 3.0


# ---------------------------------------------------------------- weak form


def test_weak_residual_zero_curvature():
    phis = random_test_functions(0, 5)
    rep = weak_residual(lambda s: np.zeros_like(s), 3.0, 1.7, phis, 5.0)
    assert rep.residual_norm == 0.0 and rep.passed


def test_weak_residual_wavelike_matched():
    cls = canonical_class("wavelike", 2.5, q=0.7)
    rep = class_weak_residual(cls, class_window(cls))
    assert rep.passed and rep.residual_norm < 1e-8


def test_weak_residual_flatcore_p3():
    cls = canonical_class("flatcore", 3.0, spec=FlatCoreSpec(2, (1, -1), (0.5, 1.0)))
    rep = class_weak_residual(cls, class_window(cls), seed=3)
    assert rep.residual_norm < 1e-8


def test_weak_residual_bump_outside_interval():
    with pytest.raises(DomainError):
        weak_residual(lambda s: s, 2.0, 1.0, [TestFunction(-1.0, 1.0)], 2.0)


@pytest.mark.parametrize("fam", ["wavelike", "orbitlike", "circular", "borderline", "flatcore"])
def test_wrong_multiplier_is_detected(fam):
    p = 3.0 if fam == "flatcore" else 1.5
    cls = canonical_class(fam, p, q=0.8 if fam in ("wavelike", "orbitlike") else None)
    rep = class_weak_residual(cls, class_window(cls), lam=1.1 * cls.lam)
    assert rep.residual_norm > 1e-3


# ---------------------------------------------------------------- strong form


def test_strong_residual_circle_machine_scale():
    rep = strong_residual(Circular(p=3.0, lam=2.0, k0=1.0))
    assert rep.residual_norm == 0.0 and math.isnan(rep.metadata["order"])


def test_strong_residual_orbitlike_order_two():
    rep = strong_residual(canonical_class("orbitlike", 3.0, q=0.65), (0.0, 4.0, 64))
    assert rep.passed
    assert rep.metadata["residual_h"] / rep.metadata["residual_h2"] == pytest.approx(4.0, rel=0.1)


def test_strong_residual_wavelike_across_a_zero():
    cls = canonical_class("wavelike", 1.5, q=0.8)
    K = ell.complete("F1", 1.5, 0.8)
    rep = strong_residual(cls, (K - 1.0, K + 1.0, 64))
    assert rep.passed and rep.metadata["n_points"] == 65


def test_strong_residual_bad_grid():
    with pytest.raises(DomainError):
        strong_residual(Circular(p=2.0, lam=1.0, k0=1.0), (0.0, 1.0, 2))


def test_strong_residual_wrong_multiplier_breaks_order():
    from dataclasses import replace

    cls = canonical_class("orbitlike", 2.0, q=0.5)
    rep = strong_residual(replace(cls, lam=1.1 * cls.lam))
    assert not rep.passed


# ---------------------------------------------------------------- conservation


def test_conservation_linear_and_flatcore():
    assert conservation_drift(Linear(p=2.0, lam=1.0)).residual_norm == 0.0
    cls = canonical_class("flatcore", 4.0)
    rep = conservation_drift(cls, (*class_window(cls), 400))
    assert rep.residual_norm < 1e-10 and abs(rep.metadata["D0"]) < 1e-12


def test_conservation_wavelike_p2_free():
    q = 1 / math.sqrt(2)
    cls = canonical_class("wavelike", 2.0, q=q)
    assert cls.lam == pytest.approx(0.0, abs=1e-15)
    # start at a zero of w, where the potential term vanishes
    K = ell.complete("F1", 2.0, q)
    rep = conservation_drift(cls, (K, K + 10.0, 500))
    _, w, wd = curvature_of(cls, K)
    assert abs(w) < 1e-15
    assert rep.residual_norm < 1e-12
    assert rep.metadata["D0"] == pytest.approx(4 * wd**2, rel=1e-12)


# ---------------------------------------------------------------- first variation


def test_first_variation_circle():
    p = 3.0
    cls = Circular(p=p, lam=p - 1.0, k0=1.0)
    tr = trace_family(cls, s_range=(0, 2 * math.pi), n_samples=101)
    rep = first_variation(tr, p - 1.0, random_perturbations(0, 2 * math.pi, 8, seed=1), p)
    assert rep.passed and rep.metadata["max_fd_mismatch"] < 1e-6


def test_first_variation_line():
    tr = trace_family("linear", s_range=(0, 3), n_samples=11)
    rep = first_variation(tr, 2.7, random_perturbations(0, 3, 8, seed=2), 2.0)
    # the analytic value is exact; the quotient carries roundoff only
    assert rep.residual_norm < 1e-8
    assert max(abs(r["analytic"]) for r in rep.metadata["per_perturbation"]) < 1e-14


def test_first_variation_circle_wrong_multiplier():
    p = 3.0
    tr = trace_family(Circular(p=p, lam=2 * (p - 1), k0=1.0), s_range=(0, 2 * math.pi), n_samples=101)
    rep = first_variation(tr, 2 * (p - 1.0), random_perturbations(0, 2 * math.pi, 8, seed=1), p)
    assert rep.residual_norm > 1e-2


def test_first_variation_flatcore_trace():
    p = 4.0
    cls = canonical_class("flatcore", p, spec=FlatCoreSpec(2, (1, 1), (0.3, 0.8)))
    a, b = class_window(cls)
    tr = trace_flatcore(p, cls.spec, n_samples=201)
    rep = first_variation(tr, cls.lam, random_perturbations(a, b, 8, seed=5), p, curvature_zeros(cls, a, b))
    assert rep.passed


def test_first_variation_needs_evaluator():
    from pelastica.curves import from_csv, to_csv

    tr = from_csv(to_csv(trace_family("circular", s_range=(0, 1), n_samples=5)))
    with pytest.raises(DomainError):
        first_variation(tr, 1.0, [], 2.0)


# ---------------------------------------------------------------- exponent probes


def test_probe_wavelike_p3():
    cls = canonical_class("wavelike", 3.0, q=0.6)
    rep = probe_report(cls)
    assert rep.passed and rep.metadata["predicted"] == 0.5


def test_probe_flatcore_p4():
    rep = probe_report(canonical_class("flatcore", 4.0))
    assert rep.passed
    assert rep.metadata["fitted"][0] == pytest.approx(1.0, rel=0.05)


def test_probe_simple_zero_p2():
    cls = canonical_class("wavelike", 2.0, q=0.6)
    K = ell.complete("F1", 2.0, 0.6)
    k = lambda s: curvature_of(cls, s)[0]
    assert exponent_probe(k, K, 1, 0.05) == pytest.approx(1.0, abs=1e-3)


def test_probe_errors():
    with pytest.raises(FitError):
        exponent_probe(lambda s: np.zeros_like(s), 0.0, 1, 0.1)
    with pytest.raises(DomainError):
        exponent_probe(lambda s: s, 0.0, 0, 0.1)
    assert probe_report(Circular(p=2.0, lam=1.0, k0=1.0)) is None


# ---------------------------------------------------------------- sampled traces


def test_trace_weak_residual_tracks_multiplier():
    cls = canonical_class("wavelike", 3.0, q=0.8)
    tr = trace_family(cls, s_range=class_window(cls), n_samples=4001)
    assert trace_weak_residual(tr, 3.0, cls.lam).passed
    assert trace_weak_residual(tr, 3.0, 1.1 * cls.lam).residual_norm > 1e-3


# ---------------------------------------------------------------- suites


def test_run_suite_reports_are_json():
    reps = run_suite(2.0, "conserve")
    assert {r.metadata["family"] for r in reps} == {"linear", "circular", "wavelike", "orbitlike", "borderline"}
    blob = json.dumps([r.to_dict() for r in reps])
    assert all(row["pass"] for row in json.loads(blob))


def test_run_suite_negative_control():
    reps = run_suite(4.0, "weak", families=("wavelike", "flatcore"), lam=3.3)
    assert not any(r.passed for r in reps)


def test_run_suite_unknown():
    with pytest.raises(DomainError):
        run_suite(2.0, "nope")


@settings(max_examples=15, deadline=None)
@given(p=st.sampled_from(P_GRID), q=st.floats(0.1, 0.95))
def test_matched_wavelike_and_orbitlike_pass_weak_form(p, q):
    for fam in ("wavelike", "orbitlike"):
        cls = canonical_class(fam, p, q=q)
        assert class_weak_residual(cls, class_window(cls)).residual_norm < 1e-8
