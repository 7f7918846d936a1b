"""Independent numerical checks of p-elasticae.

Oracles here are deliberately built from different machinery than the
``elliptic`` module: adaptive Gauss-Kronrod with algebraic endpoint weights
(QUADPACK through scipy) and the classical arithmetic-geometric mean.

The criticality checks come in three flavours:

* weak form of the curvature equation against compactly supported bumps,
* strong form of the semilinear equation for ``w = |k|^(p-2) k`` by central
  differences, with a two-grid order estimate,
* first variation of ``B_p + lam L`` along vector-valued bumps, cross-checked
  by a central difference of the energy of the perturbed curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import Polynomial
from scipy import integrate as sp_integrate

from . import elliptic as ell
from ._errors import DomainError, FitError, ToleranceError
from .classify import (
    Borderline,
    Circular,
    FlatCore,
    FlatCoreSpec,
    Orbitlike,
    Potential,
    SolutionClass,
    Wavelike,
    canonical_class,
    curvature_of,
    curvature_zeros,
    potential_eval,
)
from .curves import Trace, trace_family
from .quadrature import _nodes

__all__ = [
    "VerifyReport",
    "TestFunction",
    "random_test_functions",
    "oracle_quadrature",
    "oracle_integral",
    "agm_incomplete",
    "agm_jacobi",
    "weak_residual",
    "class_weak_residual",
    "strong_residual",
    "conservation_drift",
    "first_variation",
    "random_perturbations",
    "exponent_probe",
    "trace_weak_residual",
    "probe_report",
    "run_suite",
]

KSampler = Callable[[np.ndarray], np.ndarray]


@dataclass
class VerifyReport:
    name: str
    residual_norm: float
    tolerance: float
    metadata: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.residual_norm <= self.tolerance)

    def to_dict(self) -> dict:
        return {
            "test": self.name,
            "residual_norm": float(self.residual_norm),
            "tolerance": float(self.tolerance),
            "pass": self.passed,
            "metadata": _jsonable(self.metadata),
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        return v if math.isfinite(v) else str(v)
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


# ---------------------------------------------------------------------------
# test functions


@dataclass(frozen=True)
class TestFunction:
    """Bump ``u^3 (1-u)^3 c(u)`` with ``u = (s-a)/(b-a)``, zero outside ``[a, b]``.

    Value, first and second derivative vanish at both ends, so the bump is
    ``C^2`` on the line.
    """

    __test__ = False  # keep pytest from collecting it

    a: float
    b: float
    coeffs: tuple[float, ...] = (1.0,)

    def __post_init__(self):
        if not self.b > self.a:
            raise DomainError("bump support must have b > a")

    @property
    def degree(self) -> int:
        return 6 + len(self.coeffs) - 1

    def _poly(self) -> Polynomial:
        u = Polynomial([0.0, 1.0])
        return u**3 * (1 - u) ** 3 * Polynomial(list(self.coeffs))

    def __call__(self, s, deriv: int = 0) -> np.ndarray:
        s = np.asarray(s, float)
        width = self.b - self.a
        u = (s - self.a) / width
        poly = self._poly().deriv(deriv) if deriv else self._poly()
        inside = (u > 0) & (u < 1)
        return np.where(inside, poly(np.clip(u, 0.0, 1.0)) / width**deriv, 0.0)


def random_test_functions(
    s_lo: float, s_hi: float, n: int = 8, seed: int = 0, min_frac: float = 0.15
) -> list[TestFunction]:
    """``n`` bumps with random supports strictly inside ``(s_lo, s_hi)`` and random cubic weights."""
    rng = np.random.default_rng(seed)
    L = s_hi - s_lo
    out = []
    for _ in range(n):
        width = L * rng.uniform(min_frac, 0.9)
        a = s_lo + rng.uniform(0.02, 0.98) * (L - width)
        coeffs = tuple(rng.normal(size=4))
        out.append(TestFunction(float(a), float(min(a + width, s_hi - 1e-3 * L)), coeffs))
    return out


# ---------------------------------------------------------------------------
# oracles


def oracle_quadrature(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12,
    alpha: float = 0.0,
    beta: float = 0.0,
) -> float:
    """``int_a^b f(t) (t-a)^alpha (b-t)^beta dt`` by adaptive Gauss-Kronrod.

    ``f`` should be smooth on ``[a, b]``; the algebraic endpoint factors are
    handled by the quadrature weights, so ``alpha, beta > -1`` may be singular.
    """
    if not (alpha > -1.0 and beta > -1.0):
        raise DomainError("endpoint exponents must exceed -1")
    if b == a:
        return 0.0
    if alpha == 0.0 and beta == 0.0:
        val, err, *_ = sp_integrate.quad(f, a, b, epsabs=tol, epsrel=0.0, limit=200, full_output=1)
    else:
        val, err, *_ = sp_integrate.quad(
            f, a, b, weight="alg", wvar=(alpha, beta), epsabs=tol, epsrel=0.0, limit=200, full_output=1
        )
    if not (math.isfinite(val) and err <= tol):
        raise ToleranceError(f"oracle quadrature error estimate {err:.3e} exceeds {tol:.1e}")
    return float(val)


def _kernel_powers(kind: ell.IntegralKind, p: float, q: float) -> tuple[float, float]:
    """Exponents ``(e, r)`` with integrand ``|cos t|^e (1 - q^2 sin^2 t)^r``."""
    if kind is ell.IntegralKind.F1:
        return 1.0 - 2.0 / p, -0.5
    if kind is ell.IntegralKind.E1:
        return 1.0 - 2.0 / p, 0.5
    if kind is ell.IntegralKind.F2:
        return 0.0, -1.0 / p
    return 0.0, 1.0 / p


def oracle_integral(kind, p: float, x: float, q: float, tol: float = 1e-12) -> float:
    """One of the four p-elliptic integrals by QUADPACK, split at the zeros of ``cos``."""
    kind = ell._kind(kind)
    p = ell._check_p(p)
    q = ell._check_q(q)
    x = float(x)
    if x < 0:
        return -oracle_integral(kind, p, -x, q, tol)
    e, r = _kernel_powers(kind, p, q)
    if q == 1.0:
        # 1 - sin^2 = cos^2 folds into the cos power
        e, r = e + 2.0 * r, 0.0
    if e <= -1.0 and x >= 0.5 * math.pi:
        raise DomainError("integral diverges at pi/2")
    half = 0.5 * math.pi

    def smooth(c):
        # |cos t|^e / |t - c|^e times the modulus factor, c an odd multiple of pi/2
        def g(t):
            d = t - c
            base = np.sinc(d / math.pi) ** e if e else 1.0
            return base * (1.0 - q * q * math.sin(t) ** 2) ** r

        return g

    total = 0.0
    m = 0
    while m * half < x:
        lo = m * half
        hi = min((m + 1) * half, x)
        if e == 0.0:
            total += oracle_quadrature(smooth(0.0), lo, hi, tol)
        elif e <= -1.0:
            # divergent at pi/2, so x < pi/2 here and the integrand is bounded
            total += oracle_quadrature(lambda t: math.cos(t) ** e * (1.0 - q * q * math.sin(t) ** 2) ** r, lo, hi, tol)
        elif m % 2 == 1:
            total += oracle_quadrature(smooth(lo), lo, hi, tol, alpha=e)
        else:
            c = (m + 1) * half
            total += oracle_quadrature(smooth(c), lo, c, tol, beta=e)
            if hi < c:
                total -= oracle_quadrature(smooth(c), hi, c, tol, beta=e)
        m += 1
    return total


def _agm_ladder(m: float, tol: float = 1e-17):
    a, b, c = 1.0, math.sqrt(1.0 - m), math.sqrt(m)
    ladder = [(a, b, c)]
    while abs(c) > tol * a and len(ladder) < 60:
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        ladder.append((a, b, c))
    return ladder


def agm_incomplete(phi: float, q: float) -> tuple[float, float]:
    """Legendre ``F(phi | q^2)`` and ``E(phi | q^2)`` by descending Landen steps.

    The ``q = 1`` limits ``artanh(sin phi)`` and ``sin phi`` are returned in
    closed form (``|phi| < pi/2`` for F).
    """
    q = ell._check_q(q)
    phi = float(phi)
    if q == 1.0:
        n = math.floor(phi / math.pi + 0.5)
        red = phi - n * math.pi
        E = 2.0 * n + math.sin(red)
        if abs(phi) >= 0.5 * math.pi:
            return math.inf if phi > 0 else -math.inf, E
        return math.atanh(math.sin(phi)), E
    ladder = _agm_ladder(q * q)
    ph = phi
    tail = 0.0
    for n, (a, b, c) in enumerate(ladder[:-1]):
        ph = 2.0 * ph - math.atan2((a - b) * math.sin(2.0 * ph), a + b + (a - b) * math.cos(2.0 * ph))
        tail += ladder[n + 1][2] * math.sin(ph)
    N = len(ladder) - 1
    aN = ladder[-1][0]
    F = ph / (2.0**N * aN)
    ratio = 1.0 - 0.5 * sum(2.0**n * c * c for n, (_, _, c) in enumerate(ladder))
    return F, F * ratio + tail


def agm_jacobi(u: float, q: float) -> tuple[float, float, float, float]:
    """Jacobi ``(am, sn, cn, dn)`` at parameter ``m = q^2`` by the descending AGM."""
    q = ell._check_q(q)
    m = q * q
    if m == 1.0:
        am = 2.0 * math.atan(math.tanh(0.5 * u))
        return am, math.tanh(u), 1.0 / math.cosh(u), 1.0 / math.cosh(u)
    ladder = _agm_ladder(m)
    N = len(ladder) - 1
    ph = 2.0**N * ladder[-1][0] * u
    for n in range(N, 0, -1):
        a, _, c = ladder[n]
        ph = 0.5 * (ph + math.asin(c * math.sin(ph) / a))
    sn = math.sin(ph)
    return ph, sn, math.cos(ph), math.sqrt(1.0 - m * sn * sn)


# ---------------------------------------------------------------------------
# composite rules


def _split(a: float, b: float, breaks: Sequence[float]) -> np.ndarray:
    inner = [float(t) for t in breaks if a < t < b]
    return np.array([a, *sorted(inner), b])


def _fixed_rule(edges: np.ndarray, level: int = 6) -> tuple[np.ndarray, np.ndarray]:
    """Tanh-sinh nodes and weights (step ``0.5/2^level``) on every piece of ``edges``."""
    fa = np.concatenate([_nodes(l)[0] for l in range(level + 1)])
    fb = np.concatenate([_nodes(l)[1] for l in range(level + 1)])
    w = np.concatenate([_nodes(l)[2] for l in range(level + 1)]) * (0.5 / 2**level)
    xs, ws = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = 0.5 * (hi - lo)
        if half <= 0:
            continue
        da, db = half * fa, half * fb
        keep = (da > 0) & (db > 0)
        xs.append(np.where(da <= db, lo + da, hi - db)[keep])
        ws.append((half * w)[keep])
    return np.concatenate(xs), np.concatenate(ws)


def _signed_pow(x, e):
    return np.sign(x) * np.abs(x) ** e


# ---------------------------------------------------------------------------
# weak form


def _weak_terms(k: np.ndarray, p: float, lam: float, phi: TestFunction, s: np.ndarray) -> np.ndarray:
    w = _signed_pow(k, p - 1.0)
    return np.stack(
        [
            p * w * phi(s, 2),
            (p - 1.0) * np.abs(k) ** p * k * phi(s),
            -lam * k * phi(s),
        ]
    )


def weak_residual(
    k_sampler: KSampler,
    p: float,
    lam: float,
    phis: Sequence[TestFunction],
    L: float | tuple[float, float],
    breakpoints: Sequence[float] = (),
    tol: float = 1e-8,
    level: int = 5,
) -> VerifyReport:
    """Weak curvature equation tested against each bump.

    The residual of a bump is ``|int (p w phi'' + (p-1)|k|^p k phi - lam k phi)|``
    divided by the integral of the absolute values of the three terms, so it
    is a relative cancellation measure; the report keeps the worst bump.
    ``breakpoints`` (zeros of ``k``, loop edges) split the composite
    tanh-sinh rule of step ``0.5/2^level``.
    """
    s_lo, s_hi = (0.0, float(L)) if np.ndim(L) == 0 else (float(L[0]), float(L[1]))
    for phi in phis:
        if not (s_lo < phi.a and phi.b < s_hi):
            raise DomainError("bump support must lie strictly inside the arclength interval")
    worst = 0.0
    per = []
    for phi in phis:
        nodes, wts = _fixed_rule(_split(phi.a, phi.b, breakpoints), level)
        t = _weak_terms(np.asarray(k_sampler(nodes), float), p, lam, phi, nodes)
        num = abs(float(np.sum(wts * t.sum(axis=0))))
        den = float(np.sum(wts * np.abs(t).sum(axis=0)))
        r = 0.0 if den == 0.0 else num / den
        per.append(r)
        worst = max(worst, r)
    return VerifyReport(
        "weak_residual", worst, tol, {"p": p, "lambda": lam, "n_bumps": len(phis), "per_bump": per}
    )


def class_weak_residual(
    cls: SolutionClass,
    s_range: tuple[float, float],
    phis: Sequence[TestFunction] | None = None,
    lam: float | None = None,
    seed: int = 0,
    tol: float = 1e-8,
) -> VerifyReport:
    """:func:`weak_residual` for the curvature of a class (optionally with a wrong ``lam``)."""
    a, b = s_range
    if phis is None:
        phis = random_test_functions(a, b, seed=seed)
    lam = cls.lam if lam is None else lam
    rep = weak_residual(
        lambda s: curvature_of(cls, s)[0], cls.p, lam, phis, (a, b), curvature_zeros(cls, a, b), tol
    )
    rep.metadata["family"] = cls.family
    return rep


# ---------------------------------------------------------------------------
# strong form and conservation


def _exclusion(cls: SolutionClass, s_lo: float, s_hi: float) -> tuple[np.ndarray, float]:
    """Points near which ``w`` is not ``C^4``-like enough for a clean second order, and the window."""
    p = cls.p
    if isinstance(cls, Wavelike) and p > 1.5 and p != 2.0:
        return curvature_zeros(cls, s_lo - 1.0, s_hi + 1.0), 0.05 / cls.alpha
    if isinstance(cls, FlatCore) and p > 3.0:
        return curvature_zeros(cls, s_lo - 1.0, s_hi + 1.0), 0.05 / cls.A_pl
    return np.array([]), 0.0


def _ode_terms(w: np.ndarray, p: float, lam: float) -> tuple[np.ndarray, np.ndarray]:
    return (p - 1.0) * _signed_pow(w, 1.0 + 2.0 / (p - 1.0)), lam * _signed_pow(w, 1.0 + (2.0 - p) / (p - 1.0))


def strong_residual(
    cls: SolutionClass,
    grid: tuple[float, float, int] = (0.0, 4.0, 64),
    order_band: tuple[float, float] = (1.7, 2.3),
    floor: float = 1e-10,
) -> VerifyReport:
    """Second-difference residual of the equation for ``w`` on steps ``h`` and ``h/2``.

    ``grid = (s_lo, s_hi, n)`` gives ``h = (s_hi - s_lo)/n`` and the ``n+1``
    evaluation points.  The reported residual is the distance of the measured
    order from 2 (tolerance from ``order_band``); when both residuals are below
    ``floor`` the equation holds at machine scale and the residual is 0.
    """
    s_lo, s_hi, n = float(grid[0]), float(grid[1]), int(grid[2])
    if n < 4 or not s_hi > s_lo:
        raise DomainError("strong_residual needs s_hi > s_lo and n >= 4")
    h = (s_hi - s_lo) / n
    s = np.linspace(s_lo, s_hi, n + 1)
    pts, win = _exclusion(cls, s_lo, s_hi)
    if pts.size:
        dist = np.min(np.abs(s[:, None] - pts[None, :]), axis=1)
        s = s[dist > win + h]
    if s.size < 3:
        raise DomainError("grid leaves too few points outside the exclusion windows")
    p, lam = cls.p, cls.lam

    def residual(step):
        _, w0, _ = curvature_of(cls, s)
        _, wp, _ = curvature_of(cls, s + step)
        _, wm, _ = curvature_of(cls, s - step)
        t1, t2 = _ode_terms(w0, p, lam)
        scale = 1.0 + np.max(np.abs(t1)) + np.max(np.abs(t2))
        return np.max(np.abs(p * (wp - 2.0 * w0 + wm) / step**2 + t1 - t2)) / scale

    r1, r2 = residual(h), residual(0.5 * h)
    if max(r1, r2) <= floor:
        order, dev = float("nan"), 0.0
    else:
        order = math.log2(r1 / r2) if r2 > 0 else float("inf")
        dev = abs(order - 2.0)
    tol = max(2.0 - order_band[0], order_band[1] - 2.0)
    meta = {"family": cls.family, "p": p, "lambda": lam, "h": h, "residual_h": r1, "residual_h2": r2,
            "order": order, "n_points": int(s.size), "excluded_window": win}
    if hasattr(cls, "q"):
        meta["q"] = cls.q
    return VerifyReport("strong_residual", dev, tol, meta)


def conservation_drift(
    cls: SolutionClass, grid: tuple[float, float, int] = (0.0, 4.0, 400), tol: float = 1e-8
) -> VerifyReport:
    """Spread of ``p^2 w'^2 + F(w)`` along the grid relative to ``1 + |D0|``."""
    s = np.linspace(float(grid[0]), float(grid[1]), int(grid[2]) + 1)
    _, w, wd = curvature_of(cls, s)
    pot = Potential(cls.p, cls.lam)
    H = cls.p**2 * wd**2 + potential_eval(pot, w)[0]
    D0 = float(H[0])
    spread = float(H.max() - H.min()) / (1.0 + abs(D0))
    return VerifyReport("conservation_drift", spread, tol, {"family": cls.family, "p": cls.p, "lambda": cls.lam, "D0": D0})


# ---------------------------------------------------------------------------
# first variation


@dataclass(frozen=True)
class Perturbation:
    """Vector field ``(phi_x, phi_y)`` along the arclength parameter."""

    x: TestFunction
    y: TestFunction

    def __call__(self, s, deriv: int = 0) -> tuple[np.ndarray, np.ndarray]:
        return self.x(s, deriv), self.y(s, deriv)


def random_perturbations(s_lo: float, s_hi: float, n: int = 8, seed: int = 0) -> list[Perturbation]:
    rng = np.random.default_rng(seed)
    out = []
    for bump in random_test_functions(s_lo, s_hi, n, seed=int(rng.integers(2**31))):
        other = TestFunction(bump.a, bump.b, tuple(rng.normal(size=4)))
        out.append(Perturbation(bump, other))
    return out


def _energy(T, N, k, d1, d2, p, lam, eps, weights):
    """``B_p + lam L`` of ``gamma + eps eta`` from derivatives at the rule nodes."""
    gx, gy = T[0] + eps * d1[0], T[1] + eps * d1[1]
    hx, hy = k * N[0] + eps * d2[0], k * N[1] + eps * d2[1]
    speed = np.hypot(gx, gy)
    kappa = (gx * hy - gy * hx) / speed**3
    return float(np.sum(weights * (np.abs(kappa) ** p + lam) * speed))


def first_variation(
    trace: Trace,
    lam: float,
    perturbations: Sequence[Perturbation],
    p: float | None = None,
    breakpoints: Sequence[float] = (),
    tol: float = 1e-6,
    level: int = 6,
    fd: bool = True,
) -> VerifyReport:
    """``<d(B_p + lam L)[gamma], eta>`` for each perturbation, normalized.

    The analytic variation is compared with the central difference of the
    energy of ``gamma + eps eta`` (``eps = 1e-5`` times the curve scale, with
    a Richardson step at ``eps/2``).  Both are evaluated on one composite
    tanh-sinh rule split at ``breakpoints`` and at the bump ends.

    With ``fd=False`` only the analytic value enters the residual; the
    difference quotient is still recorded.  That is the right mode for
    wavelike curves with ``p < 3/2``, where ``k`` vanishes to order
    ``1/(p-1) > 2`` and the quotient carries an ``eps^(2p-2)`` error.
    """
    if trace.frame is None:
        raise DomainError("first_variation needs a trace with an evaluator")
    p = float(trace.params.get("p") if p is None else p)
    scale = max(float(np.ptp(trace.x)), float(np.ptp(trace.y)), 1e-12)
    eps = 1e-5 * scale
    worst = 0.0
    worst_fd_gap = 0.0
    rows = []
    for eta in perturbations:
        edges = _split(min(eta.x.a, eta.y.a), max(eta.x.b, eta.y.b), breakpoints)
        s, wts = _fixed_rule(edges, level)
        _, _, th, k = trace.frame(s)
        T = (np.cos(th), np.sin(th))
        N = (-np.sin(th), np.cos(th))
        d1 = eta(s, 1)
        d2 = eta(s, 2)
        t_d1 = T[0] * d1[0] + T[1] * d1[1]
        n_d2 = N[0] * d2[0] + N[1] * d2[1]
        terms = np.stack([(1.0 - 2.0 * p) * np.abs(k) ** p * t_d1, p * _signed_pow(k, p - 1.0) * n_d2, lam * t_d1])
        analytic = float(np.sum(wts * terms.sum(axis=0)))
        norm = float(np.sum(wts * np.abs(terms).sum(axis=0)))

        def dq(e):
            return (_energy(T, N, k, d1, d2, p, lam, e, wts) - _energy(T, N, k, d1, d2, p, lam, -e, wts)) / (2.0 * e)

        fd1, fd2 = dq(eps), dq(0.5 * eps)
        quot = (4.0 * fd2 - fd1) / 3.0
        if norm == 0.0:
            r_an = r_fd = gap = 0.0
        else:
            r_an, r_fd, gap = abs(analytic) / norm, abs(quot) / norm, abs(quot - analytic) / norm
        worst = max(worst, r_an, r_fd) if fd else max(worst, r_an)
        worst_fd_gap = max(worst_fd_gap, gap)
        rows.append({"analytic": analytic, "finite_difference": quot, "norm": norm})
    meta = {"p": p, "lambda": lam, "eps": eps, "fd_in_residual": fd, "n_perturbations": len(perturbations),
            "max_fd_mismatch": worst_fd_gap, "per_perturbation": rows, "family": trace.family}
    return VerifyReport("first_variation", worst, tol, meta)


# ---------------------------------------------------------------------------
# exponent probe


def exponent_probe(
    k_sampler: KSampler,
    s0: float,
    side: int,
    window: float,
    n_points: int = 12,
    discard: int = 2,
) -> float:
    """Least-squares slope of ``log|k|`` against ``log|s - s0|`` on a dyadic ladder.

    Samples sit at ``s0 + side * 2^-j * window`` for ``j < n_points``; the
    ``discard`` points closest to ``s0`` are dropped.
    """
    if side not in (1, -1):
        raise DomainError("side must be +1 or -1")
    if not window > 0:
        raise DomainError("window must be positive")
    t = window * 2.0 ** -np.arange(n_points)
    t = t[: n_points - discard]
    k = np.abs(np.asarray(k_sampler(s0 + side * t), float))
    if np.any(~np.isfinite(k)) or np.any(k < np.finfo(float).tiny):
        raise FitError("curvature underflowed on the probe ladder; widen the window")
    slope, _ = np.polyfit(np.log(t), np.log(k), 1)
    return float(slope)


# ---------------------------------------------------------------------------
# sampled traces


def trace_weak_residual(
    trace: Trace, p: float, lam: float, phis: Sequence[TestFunction] | None = None, seed: int = 0, tol: float = 5e-4
) -> VerifyReport:
    """Weak residual from the samples alone (trapezoid rule on the stored ``k``).

    The rule converges only algebraically across curvature zeros, hence the
    loose default tolerance; a wrong multiplier still shows up at ``1e-3``.

    Depends only on the sampled columns, so a trace and its CSV copy give the
    same number.
    """
    s, k = np.asarray(trace.s, float), np.asarray(trace.k, float)
    if phis is None:
        phis = random_test_functions(float(s[0]), float(s[-1]), seed=seed)
    worst = 0.0
    for phi in phis:
        t = _weak_terms(k, p, lam, phi, s)
        num = abs(float(np.trapezoid(t.sum(axis=0), s)))
        den = float(np.trapezoid(np.abs(t).sum(axis=0), s))
        worst = max(worst, 0.0 if den == 0.0 else num / den)
    return VerifyReport("trace_weak_residual", worst, tol, {"p": p, "lambda": lam, "n_samples": int(s.size), "family": trace.family})


# ---------------------------------------------------------------------------
# suites over canonical classes

SUITES = ("weak", "strong", "conserve", "variation", "exponent")
DEFAULT_FLATCORE = FlatCoreSpec(2, (1, -1), (0.5, 1.0))


def default_families(p: float) -> tuple[str, ...]:
    loop = "flatcore" if p > 2.0 else "borderline"
    return ("linear", "circular", "wavelike", "orbitlike", loop)


def class_window(cls: SolutionClass) -> tuple[float, float]:
    """An arclength window showing the features of the class (zeros, loops, a full period)."""
    if isinstance(cls, Wavelike):
        return 0.0, 4.0 * ell.complete("F1", cls.p, cls.q) / cls.alpha
    if isinstance(cls, Orbitlike):
        return 0.0, 4.0 * ell.complete("F2", cls.p, cls.q) / cls.alpha
    if isinstance(cls, Borderline):
        return -4.0 / cls.A_pl, 4.0 / cls.A_pl
    if isinstance(cls, FlatCore):
        return 0.0, cls.centers[-1] + cls.T_pl + 1.0 / cls.A_pl
    if isinstance(cls, Circular):
        return 0.0, 2.0 * math.pi / abs(cls.k0)
    return 0.0, 4.0


def probe_report(cls: SolutionClass, window: float = 0.05) -> VerifyReport | None:
    """Fitted exponent at a curvature zero (wavelike) or loop edge (flat-core) against the prediction."""
    ks = lambda s: curvature_of(cls, s)[0]  # noqa: E731
    if isinstance(cls, Wavelike):
        z = (ell.complete("F1", cls.p, cls.q) - cls.beta) / cls.alpha
        predicted = 1.0 / (cls.p - 1.0)
        fitted = [exponent_probe(ks, z, side, window / cls.alpha) for side in (1, -1)]
    elif isinstance(cls, FlatCore):
        z = cls.centers[0] + cls.T_pl
        predicted = 2.0 / (cls.p - 2.0)
        fitted = [exponent_probe(ks, z, -1, window / cls.A_pl)]
    else:
        return None
    dev = max(abs(f - predicted) for f in fitted) / predicted
    meta = {"family": cls.family, "p": cls.p, "lambda": cls.lam, "s0": z, "predicted": predicted, "fitted": fitted}
    return VerifyReport("exponent_probe", dev, 0.05, meta)


def run_suite(
    p: float,
    suite: str = "all",
    families: Sequence[str] | None = None,
    q: float = 0.8,
    lam: float | None = None,
    seed: int = 0,
    spec: FlatCoreSpec | None = None,
) -> list[VerifyReport]:
    """Run the chosen checks on canonical classes of each family.

    ``lam`` replaces the matched multiplier of every class, which turns the
    run into a negative control.
    """
    p = ell._check_p(p)
    if suite != "all" and suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}")
    chosen = SUITES if suite == "all" else (suite,)
    reports = []
    for fam in families or default_families(p):
        cls = canonical_class(fam, p, q if fam in ("wavelike", "orbitlike") else None,
                              spec=(spec or DEFAULT_FLATCORE) if fam == "flatcore" else None)
        a, b = class_window(cls)
        mult = cls.lam if lam is None else float(lam)
        zeros = curvature_zeros(cls, a, b)
        found = []
        if "weak" in chosen:
            found.append(class_weak_residual(cls, (a, b), lam=mult, seed=seed))
        if "strong" in chosen:
            target = cls if lam is None else replace(cls, lam=mult)
            found.append(strong_residual(target, (a, b, 64)))
        if "conserve" in chosen:
            found.append(conservation_drift(cls, (a, b, 400)))
        if "variation" in chosen:
            tr = _trace_of(cls, (a, b))
            fd = not (isinstance(cls, Wavelike) and p < 1.5)
            found.append(first_variation(tr, mult, random_perturbations(a, b, 8, seed), p, zeros, fd=fd))
        if "exponent" in chosen:
            rep = probe_report(cls)
            if rep is not None:
                found.append(rep)
        for rep in found:
            rep.metadata.setdefault("family", fam)
            rep.metadata["seed"] = seed
        reports.extend(found)
    return reports


def _trace_of(cls: SolutionClass, s_range: tuple[float, float]) -> Trace:
    return trace_family(cls, s_range=s_range, n_samples=401)
