"""Scalar root finders on known brackets."""

from __future__ import annotations

from typing import Callable

from ._errors import ToleranceError


def newton_bracketed(
    fun: Callable[[float], tuple[float, float]],
    lo: float,
    hi: float,
    xtol: float = 1e-15,
    maxiter: int = 200,
) -> float:
    """Root of ``fun`` in ``[lo, hi]``; ``fun`` returns ``(value, derivative)``.

    Newton steps are taken while they stay inside the shrinking bracket
    and the derivative is in ``[1e-8, 1e8]``; otherwise the bracket is bisected.
    """
    f_lo, _ = fun(lo)
    f_hi, _ = fun(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise ToleranceError(f"no sign change on [{lo!r}, {hi!r}]")
    rising = f_hi > 0
    x = 0.5 * (lo + hi)
    for _ in range(maxiter):
        f, d = fun(x)
        if f == 0.0:
            return x
        if (f > 0) == rising:
            hi = x
        else:
            lo = x
        step = f / d if d != 0 else float("inf")
        cand = x - step
        if lo < cand < hi and 1e-8 <= abs(d) <= 1e8:
            x_new = cand
        else:
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= xtol * max(1.0, abs(x)) or hi - lo <= xtol * max(1.0, abs(x)):
            return x_new
        x = x_new
    raise ToleranceError("bracketed Newton iteration did not converge")


def bisect(fun: Callable[[float], float], lo: float, hi: float, ftol: float, xtol: float = 4e-16, maxiter: int = 200) -> float:
    """Plain bisection for a monotone ``fun``; stops on ``|f| <= ftol`` or a collapsed bracket."""
    f_lo = fun(lo)
    rising = f_lo < 0
    mid = 0.5 * (lo + hi)
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        f = fun(mid)
        if abs(f) <= ftol and hi - lo <= 1e-12:
            return mid
        if (f < 0) == rising:
            lo = mid
        else:
            hi = mid
        if hi - lo <= xtol * max(1.0, abs(mid)):
            return 0.5 * (lo + hi)
    raise ToleranceError("bisection did not converge")
