"""Default tolerances, overridable through the ``PELASTICA_TOL`` environment variable.

The variable holds either a single float (applied to integrals, inversions
scaled by 10) or comma separated ``key=value`` pairs, e.g.
``PELASTICA_TOL="integral=1e-13,inversion=1e-12"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

_ENV = "PELASTICA_TOL"


@dataclass(frozen=True)
class Tolerances:
    integral: float = 1e-12
    inversion: float = 1e-11


def _parse(raw: str) -> Tolerances:
    raw = raw.strip()
    if not raw:
        return Tolerances()
    if "=" not in raw:
        t = float(raw)
        return Tolerances(integral=t, inversion=10.0 * t)
    values = {}
    for item in raw.split(","):
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in ("integral", "inversion"):
            raise ValueError(f"unknown tolerance key {key!r} in {_ENV}")
        values[key] = float(val)
    return Tolerances(**values)


def tolerances() -> Tolerances:
    """Current tolerances (re-read from the environment on every call)."""
    tol = _parse(os.environ.get(_ENV, ""))
    if not (tol.integral > 0 and tol.inversion > 0):
        raise ValueError(f"{_ENV} tolerances must be positive")
    return tol
