"""Closed-form arclength traces of p-elasticae and closed-curve tools.

Canonical profiles (curvature ``k``, tangential angle ``theta``):

* linear      ``(s, 0)``
* wavelike    ``(2 E1(am1(s)) - s, -q p/(p-1) |cn|^(p-2) cn)``, ``theta = 2 asin(q sn)``
* borderline  ``(2 tanh_p s - s, -p/(p-1) sech_p^(p-1) s)``, ``theta = 2 am1(s, 1)``
* orbitlike   ``((2 E2_{p/(p-1)}(am2(s)) + (q^2 - 2) s)/q^2, -p/((p-1) q^2) dn^(p-1))``
* circular    ``(cos s, sin s)``
* flat-core   straight pieces along ``(-1, 0)`` alternating with ``sech_p`` loops,
  traversed from right to left.

Every tracer is backed by an evaluator that returns ``(x, y, theta, k)`` at
arbitrary arclengths, so checks can resample a trace exactly.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, NamedTuple, Sequence

import numpy as np

from . import elliptic as ell
from ._errors import DomainError
from ._roots import bisect
from .classify import (
    Borderline,
    Circular,
    FlatCore,
    FlatCoreSpec,
    Linear,
    Orbitlike,
    SolutionClass,
    Wavelike,
)
from .quadrature import integrate

__all__ = [
    "CurveSample",
    "Trace",
    "ClosedCurveReport",
    "canonical_frame",
    "trace_family",
    "loop_arc",
    "flat_segment",
    "concat",
    "trace_flatcore",
    "flatcore_frame",
    "Q",
    "qstar",
    "figure_eight",
    "X2p",
    "closure_check",
    "to_csv",
    "from_csv",
    "to_svg",
]

Frame = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]]
FAMILIES = ("linear", "wavelike", "borderline", "orbitlike", "circular", "flatcore")


class CurveSample(NamedTuple):
    s: float
    x: float
    y: float
    theta: float
    k: float


@dataclass
class Trace:
    """Samples of an arclength parameterized curve.

    ``frame`` (when present) evaluates ``(x, y, theta, k)`` at any arclength in
    the trace's own parameter; traces read back from CSV have none.
    """

    family: str
    params: dict
    s: np.ndarray
    x: np.ndarray
    y: np.ndarray
    theta: np.ndarray
    k: np.ndarray
    frame: Frame | None = field(default=None, repr=False, compare=False)

    @property
    def samples(self) -> list[CurveSample]:
        return [CurveSample(*row) for row in zip(self.s, self.x, self.y, self.theta, self.k)]

    @property
    def s_range(self) -> tuple[float, float]:
        return float(self.s[0]), float(self.s[-1])

    @property
    def length(self) -> float:
        return float(self.s[-1] - self.s[0])

    def __len__(self) -> int:
        return self.s.size


def _sample(family: str, params: dict, frame: Frame, s_range, n_samples: int) -> Trace:
    a, b = (float(v) for v in s_range)
    if n_samples < 2:
        raise DomainError("n_samples must be at least 2")
    if not b > a:
        raise DomainError(f"empty arclength range {s_range!r}")
    s = np.linspace(a, b, int(n_samples))
    x, y, th, k = frame(s)
    return Trace(family, dict(params), s, x, y, th, k, frame)


# ---------------------------------------------------------------------------
# canonical frames


def _linear_frame(s):
    z = np.zeros_like(s)
    return s.copy(), z, z.copy(), z.copy()


def _circular_frame(s):
    return np.cos(s), np.sin(s), s + 0.5 * math.pi, np.ones_like(s)


def _wavelike_frame(p: float, q: float) -> Frame:
    def frame(s):
        st = ell._amplitude_state(1, p, s, q)
        c, sn = st.cos(), st.sin()
        x = 2.0 * st.integral("E1", p, q) - s
        y = -q * p / (p - 1.0) * np.sign(c) * np.abs(c) ** (2.0 - 2.0 / p)
        theta = 2.0 * np.arcsin(np.clip(q * sn, -1.0, 1.0))
        k = 2.0 * q * np.sign(c) * np.abs(c) ** (2.0 / p)
        return x, y, theta, k

    return frame


def _loop_frame(p: float, sign: float) -> Frame:
    """``gamma_b^sign``; for ``p > 2`` valid on ``[-K_p(1), K_p(1)]``."""
    def frame(s):
        st = ell._amplitude_state(1, p, s, 1.0)
        c = st.cos()
        x = 2.0 * st.integral("E1", p, 1.0) - s
        y = -sign * p / (p - 1.0) * c ** (2.0 - 2.0 / p)
        theta = sign * 2.0 * st.value
        k = sign * 2.0 * c ** (2.0 / p)
        return x, y, theta, k

    return frame


def _orbitlike_frame(p: float, q: float) -> Frame:
    pc = p / (p - 1.0)

    def frame(s):
        st = ell._amplitude_state(2, p, s, q)
        c, sn = _quarter_trig(st)
        d = (c * c + (1.0 - q) * (1.0 + q) * sn * sn) ** (1.0 / p)
        x = (2.0 * st.integral("E2", pc, q) + (q * q - 2.0) * s) / (q * q)
        y = -pc * d ** (p - 1.0) / (q * q)
        return x, y, 2.0 * st.value, 2.0 * d

    return frame


def _quarter_trig(st):
    return ell._trig(st.a, st.g)


def canonical_frame(family: str, p: float | None = None, q: float | None = None) -> Frame:
    """Evaluator of the canonical profile of a family."""
    family = family.lower()
    if family == "linear":
        return _linear_frame
    if family == "circular":
        return _circular_frame
    if p is None:
        raise DomainError(f"{family} profile needs p")
    p = ell._check_p(p)
    if family in ("wavelike", "orbitlike"):
        if q is None or not (0.0 < q < 1.0):
            raise DomainError(f"{family} profile needs a modulus q in (0, 1), got {q!r}")
        return _wavelike_frame(p, float(q)) if family == "wavelike" else _orbitlike_frame(p, float(q))
    if family == "borderline":
        if p > 2.0:
            raise DomainError("the borderline profile exists only for p <= 2; use a flat-core trace")
        return _loop_frame(p, 1.0)
    raise DomainError(f"no canonical frame for family {family!r}")


def _similarity(frame: Frame, scale: float, shift: float, reflect: bool) -> Frame:
    """Curve ``s -> scale * gamma(s/scale + shift)``, mirrored in the x-axis if asked."""
    sgn = -1.0 if reflect else 1.0

    def out(s):
        x, y, th, k = frame(s / scale + shift)
        return scale * x, sgn * scale * y, sgn * th, sgn * k / scale

    return out


# ---------------------------------------------------------------------------
# flat-core assembly


def flatcore_frame(p: float, spec: FlatCoreSpec) -> tuple[Frame, float]:
    """Evaluator of the canonical flat-core curve (``A = 1``) and its length.

    Beyond ``[0, L]`` the curve continues along its end tangents.
    """
    p = ell._check_p(p)
    if p <= 2.0:
        raise DomainError("flat-core curves exist only for p > 2")
    K = ell.complete("F1", p, 1.0)
    shift_x = 4.0 * ell.complete("E1", p, 1.0) - 2.0 * K
    pieces = []  # (t_start, t_end, kind, sign, x0, theta0)
    t, x0, th = 0.0, 0.0, math.pi
    for sign, L in zip(spec.signs, spec.lengths):
        pieces.append((t, t + L, "flat", 0, x0, th))
        t, x0 = t + L, x0 - L
        pieces.append((t, t + 2.0 * K, "loop", sign, x0, th))
        t, x0, th = t + 2.0 * K, x0 + shift_x, th + 2.0 * math.pi * sign
    total = t
    loops = {1: _loop_frame(p, 1.0), -1: _loop_frame(p, -1.0)}

    def frame(s):
        s = np.asarray(s, float)
        x = np.empty_like(s)
        y = np.zeros_like(s)
        theta = np.empty_like(s)
        k = np.zeros_like(s)
        before = s < 0
        x[before], theta[before] = -s[before], math.pi
        after = s > total
        x[after], theta[after] = x0 - (s[after] - total), th
        done = before | after
        for t0, t1, kind, sign, px, pth in pieces:
            sel = ~done & (s >= t0) & (s <= t1)
            if not np.any(sel):
                continue
            done |= sel
            if kind == "flat":
                x[sel] = px - (s[sel] - t0)
                theta[sel] = pth
                continue
            local = np.clip(s[sel] - t0 - K, -K, K)
            lx, ly, lth, lk = loops[sign](local)
            # the loop starts at gamma_b(-K) = (-shift_x/2, 0)
            x[sel] = px + lx + 0.5 * shift_x
            y[sel] = ly
            theta[sel] = pth + sign * math.pi + lth
            k[sel] = lk
        return x, y, theta, k

    return frame, total


def trace_flatcore(p: float, spec: FlatCoreSpec, n_samples: int = 2001) -> Trace:
    """Canonical flat-core curve: total length ``2 N K_p(1) + sum(L_j)``."""
    frame, total = flatcore_frame(p, spec)
    params = {"p": float(p), "spec": spec.to_dict(), "K_p1": ell.complete("F1", p, 1.0)}
    return _sample("flatcore", params, frame, (0.0, total), n_samples)


def loop_arc(p: float, sign: int, window: tuple[float, float] | None = None, n_samples: int = 801) -> Trace:
    """A single ``sech_p`` loop ``gamma_b^sign`` over ``[-K_p(1), K_p(1)]`` (or ``window``)."""
    p = ell._check_p(p)
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    if p <= 2.0 and window is None:
        raise DomainError("for p <= 2 the loop is unbounded; give a finite window")
    K = ell.complete("F1", p, 1.0)
    rng = window if window is not None else (-K, K)
    if p > 2.0 and (rng[0] < -K or rng[1] > K):
        raise DomainError("loop window must lie inside [-K_p(1), K_p(1)]")
    base = _loop_frame(p, float(sign))

    def frame(s):
        s = np.asarray(s, float)
        return base(np.clip(s, -K, K) if p > 2.0 else s)

    return _sample("loop", {"p": p, "sign": int(sign)}, frame, rng, n_samples)


def flat_segment(length: float, n_samples: int = 2) -> Trace:
    """Straight piece ``s -> (-s, 0)`` on ``[0, length]``."""
    def frame(s):
        s = np.asarray(s, float)
        z = np.zeros_like(s)
        return -s, z, np.full_like(s, math.pi), z.copy()

    return _sample("flat", {"length": float(length)}, frame, (0.0, length), n_samples)


def concat(traces: Sequence[Trace]) -> Trace:
    """C^0 concatenation: each trace is translated to start where the previous ends.

    Arclength is rebased to start at the first trace's start; duplicated
    junction samples are dropped and angles are shifted by multiples of
    ``2 pi`` to continue the previous branch.
    """
    if not traces:
        raise DomainError("nothing to concatenate")
    if len(traces) == 1:
        return traces[0]
    parts = []
    offsets = []  # (s_start_new, s_start_old, dx, dy, dtheta, frame)
    s_end = float(traces[0].s[0])
    end_xy = None
    end_th = None
    for i, tr in enumerate(traces):
        ds = s_end - tr.s[0]
        if end_xy is None:
            dx = dy = dth = 0.0
        else:
            dx = end_xy[0] - tr.x[0]
            dy = end_xy[1] - tr.y[0]
            dth = 2.0 * math.pi * round((end_th - tr.theta[0]) / (2.0 * math.pi))
        sl = slice(1 if i else 0, None)
        parts.append((tr.s[sl] + ds, tr.x[sl] + dx, tr.y[sl] + dy, tr.theta[sl] + dth, tr.k[sl]))
        offsets.append((s_end, float(tr.s[0]), float(tr.s[-1]), dx, dy, dth, tr.frame))
        s_end = float(tr.s[-1] + ds)
        end_xy = (tr.x[-1] + dx, tr.y[-1] + dy)
        end_th = tr.theta[-1] + dth
    s, x, y, th, k = (np.concatenate(col) for col in zip(*parts))

    frame = None
    if all(o[-1] is not None for o in offsets):
        def frame(t):
            t = np.asarray(t, float)
            out = [np.zeros_like(t) for _ in range(4)]
            for i, (new0, old0, old1, dx, dy, dth, fr) in enumerate(offsets):
                sel = t >= new0 if i else np.ones(t.shape, bool)
                if not np.any(sel):
                    continue
                local = np.clip(t[sel] - new0 + old0, -np.inf if i == 0 else old0, np.inf if i == len(offsets) - 1 else old1)
                vx, vy, vth, vk = fr(local)
                out[0][sel], out[1][sel], out[2][sel], out[3][sel] = vx + dx, vy + dy, vth + dth, vk
            return tuple(out)

    params = {"pieces": [tr.family for tr in traces]}
    return Trace("concat", params, s, x, y, th, k, frame)


# ---------------------------------------------------------------------------
# tracing from tags or classes


def trace_family(
    family_or_class,
    p: float | None = None,
    q: float | None = None,
    s_range: tuple[float, float] = (0.0, 1.0),
    n_samples: int = 1001,
    spec: FlatCoreSpec | None = None,
) -> Trace:
    """Trace a canonical profile (family tag plus ``p``, ``q``) or a solution class.

    Classes are traced as similarity images of the canonical profiles whose
    curvature equals the class curvature at every arclength.
    """
    if isinstance(family_or_class, str):
        fam = family_or_class.lower()
        if fam == "flatcore":
            if spec is None:
                raise DomainError("flatcore tracing needs a FlatCoreSpec")
            frame, _ = flatcore_frame(p, spec)
            return _sample(fam, {"p": p, "spec": spec.to_dict()}, frame, s_range, n_samples)
        frame = canonical_frame(fam, p, q)
        return _sample(fam, {"p": p, "q": q, "scale": 1.0}, frame, s_range, n_samples)

    cls = family_or_class
    frame, params = class_frame(cls)
    return _sample(cls.family, params, frame, s_range, n_samples)


def class_frame(cls: SolutionClass) -> tuple[Frame, dict]:
    """Evaluator and parameters of the curve of a solution class."""
    p = cls.p
    if isinstance(cls, Linear):
        return _linear_frame, {"p": p, "lambda": cls.lam}
    if isinstance(cls, Circular):
        r = 1.0 / abs(cls.k0)
        frame = _similarity(_circular_frame, r, 0.0, cls.k0 < 0)
        return frame, {"p": p, "lambda": cls.lam, "scale": r, "reflect": cls.k0 < 0}
    if isinstance(cls, (Wavelike, Orbitlike)):
        base = canonical_frame(cls.family, p, cls.q)
        scale = 1.0 / cls.alpha
        # shift chosen so that the canonical argument is alpha*s + beta
        frame = _similarity(base, scale, cls.beta, cls.A < 0)
        return frame, {"p": p, "q": cls.q, "lambda": cls.lam, "scale": scale, "shift": cls.beta, "reflect": cls.A < 0}
    if isinstance(cls, Borderline):
        scale = 1.0 / cls.A_pl
        frame = _similarity(_loop_frame(p, 1.0), scale, cls.beta, cls.sign < 0)
        return frame, {"p": p, "lambda": cls.lam, "scale": scale, "shift": cls.beta, "reflect": cls.sign < 0}
    if isinstance(cls, FlatCore):
        A = cls.A_pl
        K = ell.complete("F1", p, 1.0)
        canon = FlatCoreSpec(cls.spec.N, cls.spec.signs, tuple(A * L for L in cls.spec.lengths))
        base, _ = flatcore_frame(p, canon)
        t1 = canon.lengths[0] + K  # canonical center of loop 1
        shift = t1 - A * cls.centers[0]
        frame = _similarity(base, 1.0 / A, shift, False)
        return frame, {"p": p, "lambda": cls.lam, "scale": 1.0 / A, "shift": shift, "spec": cls.spec.to_dict()}
    raise DomainError(f"not a solution class: {cls!r}")


# ---------------------------------------------------------------------------
# closed curves


def Q(p: float, q: float) -> float:
    """``2 E1(q)/K1(q) - 1``; at ``q = 1`` the limits ``-1`` (p <= 2) or ``-1/(p-1)``."""
    p = ell._check_p(p)
    if q == 1.0:
        return -1.0 if p <= 2.0 else -1.0 / (p - 1.0)
    return 2.0 * ell.complete("E1", p, q) / ell.complete("F1", p, q) - 1.0


@lru_cache(maxsize=64)
def _qstar(p: float) -> float:
    return bisect(lambda q: Q(p, q), 0.0, 1.0, ftol=1e-13)


def qstar(p: float) -> float:
    """The unique modulus in ``(0, 1)`` with ``2 E1(q) = K1(q)``."""
    return _qstar(ell._check_p(p))


def figure_eight(p: float, N: int = 1, s0: float = 0.0, n_samples: int = 2001) -> Trace:
    """N-fold figure-eight: wavelike profile at ``q*(p)`` over ``4 N K1(q*)``."""
    if int(N) != N or N < 1:
        raise DomainError("N must be a positive integer")
    qs = qstar(p)
    K = ell.complete("F1", p, qs)
    tr = _sample("wavelike", {"p": float(p), "q": qs, "N": int(N), "s0": float(s0)},
                 _wavelike_frame(float(p), qs), (s0, s0 + 4.0 * N * K), n_samples)
    tr.params["period"] = 4.0 * K
    return tr


def X2p(p: float, q: float) -> float:
    """``(2/q^2) E2_{p/(p-1)}(q) + (1 - 2/q^2) K2_p(q)``, negative on ``(0, 1)``."""
    p = ell._check_p(p)
    if not (0.0 < q < 1.0):
        raise DomainError("X2p needs q in (0, 1)")
    if q < 0.1:
        # equivalent cosine-weighted form avoids the 1/q^2 cancellation
        return integrate(lambda t: np.cos(2 * t) * (1 - (q * np.sin(t)) ** 2) ** (-1.0 / p), 0.0, 0.5 * math.pi, atol=1e-15)
    e = ell.complete("E2", p / (p - 1.0), q)
    k = ell.complete("F2", p, q)
    return 2.0 / q**2 * (e - k) + k


@dataclass(frozen=True)
class ClosedCurveReport:
    position_gap: float
    tangent_gap: float
    turning_number: int
    turning_residual: float = 0.0

    def closed(self, tol: float = 1e-8) -> bool:
        return self.position_gap < tol and self.tangent_gap < tol

    def to_dict(self) -> dict:
        return {
            "position_gap": self.position_gap,
            "tangent_gap": self.tangent_gap,
            "turning_number": self.turning_number,
            "turning_residual": self.turning_residual,
        }


def closure_check(trace: Trace) -> ClosedCurveReport:
    """Gaps between the first and last sample, and the rounded turning number."""
    if len(trace) == 0:
        raise DomainError("empty trace")
    dx = trace.x[-1] - trace.x[0]
    dy = trace.y[-1] - trace.y[0]
    t0, t1 = trace.theta[0], trace.theta[-1]
    tg = math.hypot(math.cos(t1) - math.cos(t0), math.sin(t1) - math.sin(t0))
    turns = (t1 - t0) / (2.0 * math.pi)
    n = int(round(turns))
    return ClosedCurveReport(float(math.hypot(dx, dy)), float(tg), n, float(abs(turns - n)))


# ---------------------------------------------------------------------------
# serialization

_COLUMNS = ("s", "x", "y", "theta", "k")


def to_csv(trace: Trace) -> str:
    buf = io.StringIO()
    buf.write(",".join(_COLUMNS) + "\n")
    for row in zip(trace.s, trace.x, trace.y, trace.theta, trace.k):
        buf.write(",".join(repr(float(v)) for v in row) + "\n")
    return buf.getvalue()


def from_csv(text: str, family: str = "csv", params: dict | None = None) -> Trace:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(h.strip() for h in rows[0]) != _COLUMNS:
        raise DomainError("CSV header must be s,x,y,theta,k")
    data = np.array([[float(v) for v in r] for r in rows[1:] if r], dtype=float)
    if data.ndim != 2 or data.shape[0] < 2:
        raise DomainError("CSV trace needs at least two rows")
    if np.any(np.diff(data[:, 0]) <= 0):
        raise DomainError("arclength column must be strictly increasing")
    return Trace(family, dict(params or {}), *(data[:, i].copy() for i in range(5)))


def to_svg(trace: Trace, width: int = 640) -> str:
    """SVG polyline; y is flipped so the picture has the mathematical orientation."""
    x, y = trace.x, -trace.y
    xmin, xmax, ymin, ymax = x.min(), x.max(), y.min(), y.max()
    span = max(xmax - xmin, ymax - ymin, 1e-12)
    pad = 0.05 * span
    vb = (xmin - pad, ymin - pad, xmax - xmin + 2 * pad, ymax - ymin + 2 * pad)
    height = max(1, int(round(width * vb[3] / vb[2])))
    stroke = 0.004 * span
    pts = " ".join(f"{a:.9g},{b:.9g}" for a, b in zip(x, y))
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{vb[0]:.9g} {vb[1]:.9g} {vb[2]:.9g} {vb[3]:.9g}">\n'
        f'  <polyline fill="none" stroke="black" stroke-width="{stroke:.6g}" '
        f'stroke-linejoin="round" points="{pts}"/>\n</svg>\n'
    )
