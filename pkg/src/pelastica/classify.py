"""Classification of p-elasticae from initial curvature data.

Writing ``w = |k|^(p-2) k`` turns the curvature equation into the
semilinear ODE

    p w'' + (p-1)|w|^(2/(p-1)) w - lam |w|^((2-p)/(p-1)) w = 0,

whose energy ``p^2 w'^2 + F(w)`` is conserved, with the potential

    F(x) = (p-1)^2 |x|^(2p/(p-1)) - 2 lam (p-1) |x|^(p/(p-1)).

The level ``D0`` of the initial data relative to ``0`` and ``min F``
decides the family; the closed-form solution parameters follow from the
roots of ``F = D0``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field, replace
from typing import ClassVar, Sequence, Union

import numpy as np

from . import elliptic as ell
from ._errors import AmbiguityError, DomainError, PElasticaError, ToleranceError

__all__ = [
    "Potential",
    "InitialData",
    "FlatCoreSpec",
    "Linear",
    "Wavelike",
    "Borderline",
    "FlatCore",
    "Orbitlike",
    "Circular",
    "SolutionClass",
    "RegularityReport",
    "potential_eval",
    "potential_structure",
    "level_roots",
    "initial_data",
    "classify",
    "curvature_of",
    "curvature_zeros",
    "regularity",
    "amplitude_pl",
    "class_from_dict",
    "canonical_class",
]

_POSTCHECK_TOL = 1e-8


# ---------------------------------------------------------------------------
# potential


@dataclass(frozen=True)
class Potential:
    p: float
    lam: float

    def __post_init__(self):
        if not (self.p > 1 and math.isfinite(self.p)):
            raise DomainError(f"p must be > 1, got {self.p}")
        if not math.isfinite(self.lam):
            raise DomainError("lambda must be finite")

    @property
    def min_value(self) -> float:
        return -self.lam * self.lam if self.lam > 0 else 0.0

    @property
    def minimizer(self) -> float:
        """Positive critical point ``(lam/(p-1))^((p-1)/p)`` (``0`` when ``lam <= 0``)."""
        if self.lam <= 0:
            return 0.0
        return (self.lam / (self.p - 1.0)) ** ((self.p - 1.0) / self.p)

    @property
    def zero_root(self) -> float:
        """Positive zero ``c = (2 lam/(p-1))^((p-1)/p)`` of F (``0`` when ``lam <= 0``)."""
        if self.lam <= 0:
            return 0.0
        return (2.0 * self.lam / (self.p - 1.0)) ** ((self.p - 1.0) / self.p)


def potential_eval(pot: Potential, x):
    """``(F(x), F'(x))``; scalar in, scalar out."""
    p, lam = pot.p, pot.lam
    xa = np.abs(np.asarray(x, float))
    big = xa ** (p / (p - 1.0))
    F = (p - 1.0) ** 2 * big * big - 2.0 * lam * (p - 1.0) * big
    sgn = np.sign(x)
    Fdot = sgn * (2.0 * p * (p - 1.0) * xa ** ((p + 1.0) / (p - 1.0)) - 2.0 * p * lam * xa ** (1.0 / (p - 1.0)))
    if np.ndim(x) == 0:
        return float(F), float(Fdot)
    return F, Fdot


def potential_structure(pot: Potential) -> dict:
    """Critical points, global minimum and zeros of ``F``."""
    if pot.lam > 0:
        xm = pot.minimizer
        c = pot.zero_root
        return {
            "critical_points": [-xm, 0.0, xm],
            "global_min": pot.min_value,
            "minimizers": [-xm, xm],
            "zero_roots": [-c, 0.0, c],
        }
    return {"critical_points": [0.0], "global_min": 0.0, "minimizers": [0.0], "zero_roots": [0.0]}


def _level_u(pot: Potential, D: float) -> tuple[float, float]:
    """Roots in ``u = |x|^(p/(p-1))`` of ``(p-1)^2 u^2 - 2 lam (p-1) u = D``, larger first.

    Each root is written in the form free of cancellation for its sign of ``lam``.
    """
    p1, lam = pot.p - 1.0, pot.lam
    r = math.sqrt(max(lam * lam + D, 0.0))
    if lam >= 0:
        big = (lam + r) / p1
        small = -D / (p1 * (lam + r)) if lam + r > 0 else 0.0
    else:
        big = D / (p1 * (r - lam))
        small = (lam - r) / p1
    return big, small


def level_roots(pot: Potential, D: float) -> tuple[float, float, float, float]:
    """The four solutions ``-xi < -zeta < zeta < xi`` of ``F(x) = D``, ``min F < D < 0``."""
    if not pot.lam > 0:
        raise DomainError("four level roots exist only for lambda > 0")
    if not (pot.min_value < D < 0):
        raise DomainError(f"level {D} outside (min F, 0) = ({pot.min_value}, 0)")
    e = (pot.p - 1.0) / pot.p
    big, small = _level_u(pot, D)
    xi, zeta = big**e, small**e
    return (-xi, -zeta, zeta, xi)


def _positive_root(pot: Potential, D: float) -> float:
    """Positive root ``mu`` of ``F = D`` for ``D > 0``."""
    return _level_u(pot, D)[0] ** ((pot.p - 1.0) / pot.p)


# ---------------------------------------------------------------------------
# data and classes


@dataclass(frozen=True)
class InitialData:
    w0: float
    wdot0: float
    D0: float


def initial_data(pot: Potential, w0: float, wdot0: float) -> InitialData:
    with np.errstate(over="ignore"):
        D0 = pot.p**2 * float(wdot0) ** 2 + potential_eval(pot, float(w0))[0]
    return InitialData(float(w0), float(wdot0), D0)


@dataclass(frozen=True)
class FlatCoreSpec:
    """Loop signs and flat lengths of a flat-core curve.

    ``lengths[j]`` is the straight piece that precedes loop ``j``.
    """

    N: int
    signs: tuple[int, ...]
    lengths: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        object.__setattr__(self, "lengths", tuple(float(x) for x in self.lengths))
        if not (isinstance(self.N, (int, np.integer)) and self.N >= 1):
            raise DomainError(f"N must be a positive integer, got {self.N!r}")
        if len(self.signs) != self.N or len(self.lengths) != self.N:
            raise DomainError("signs and lengths must both have N entries")
        if any(s not in (1, -1) for s in self.signs):
            raise DomainError("loop signs must be +1 or -1")
        if any(not (x >= 0 and math.isfinite(x)) for x in self.lengths):
            raise DomainError("flat lengths must be finite and >= 0")

    @classmethod
    def from_dict(cls, d: dict) -> "FlatCoreSpec":
        try:
            return cls(N=int(d["N"]), signs=tuple(d["signs"]), lengths=tuple(d["lengths"]))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed flat-core spec: {exc}") from None

    def to_dict(self) -> dict:
        return {"N": self.N, "signs": list(self.signs), "lengths": list(self.lengths)}


def amplitude_pl(p: float, lam: float) -> float:
    """``A_{p,lam} = (1/2) (2 lam/(p-1))^(1/p)`` for ``lam > 0``."""
    if lam <= 0:
        raise DomainError("A_{p,lambda} requires lambda > 0")
    return 0.5 * (2.0 * lam / (p - 1.0)) ** (1.0 / p)


@dataclass(frozen=True)
class _Family:
    family: ClassVar[str] = ""
    p: float
    lam: float

    def to_dict(self) -> dict:
        d = {"family": self.family}
        d.update(asdict(self))
        d["lambda"] = d.pop("lam")
        return d


@dataclass(frozen=True)
class Linear(_Family):
    family: ClassVar[str] = "linear"


@dataclass(frozen=True)
class Wavelike(_Family):
    family: ClassVar[str] = "wavelike"
    A: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0
    q: float = 0.0


@dataclass(frozen=True)
class Orbitlike(_Family):
    family: ClassVar[str] = "orbitlike"
    A: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0
    q: float = 0.0


@dataclass(frozen=True)
class Borderline(_Family):
    family: ClassVar[str] = "borderline"
    sign: int = 1
    beta: float = 0.0
    A_pl: float = 0.0


@dataclass(frozen=True)
class FlatCore(_Family):
    """Loops ``sigma_j 2A sech_p(A (s - s_j))``; ``centers`` are the ``s_j``."""

    family: ClassVar[str] = "flatcore"
    spec: FlatCoreSpec = field(default_factory=lambda: FlatCoreSpec(1, (1,), (0.0,)))
    A_pl: float = 0.0
    T_pl: float = 0.0
    centers: tuple[float, ...] = ()

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["spec"] = self.spec.to_dict()
        d["centers"] = list(self.centers)
        return d


@dataclass(frozen=True)
class Circular(_Family):
    family: ClassVar[str] = "circular"
    k0: float = 1.0


SolutionClass = Union[Linear, Wavelike, Borderline, FlatCore, Orbitlike, Circular]
_FAMILIES = {c.family: c for c in (Linear, Wavelike, Borderline, FlatCore, Orbitlike, Circular)}


def class_from_dict(d: dict) -> SolutionClass:
    d = dict(d)
    fam = d.pop("family")
    d["lam"] = d.pop("lambda")
    cls = _FAMILIES[fam]
    if fam == "flatcore":
        d["spec"] = FlatCoreSpec.from_dict(d["spec"])
        d["centers"] = tuple(d["centers"])
    return cls(**d)


def flatcore_centers(first_center: float, spec: FlatCoreSpec, T: float) -> tuple[float, ...]:
    centers = [first_center]
    for j in range(1, spec.N):
        centers.append(centers[-1] + 2.0 * T + spec.lengths[j])
    return tuple(centers)


# ---------------------------------------------------------------------------
# classification


def _sgn(x: float) -> float:
    return -1.0 if x < 0 else 1.0


def _wavelike(pot: Potential, data: InitialData) -> Wavelike:
    p, lam = pot.p, pot.lam
    mu = _positive_root(pot, data.D0)
    A = mu ** (1.0 / (p - 1.0))
    Ap = mu ** (p / (p - 1.0))
    q = math.sqrt(1.0 / (2.0 - 2.0 * lam / ((p - 1.0) * Ap)))
    alpha = A / (2.0 * q)
    # w = mu * sgn(c)|c|^(2-2/p),  w' = -mu alpha (2-2/p) sin a sqrt(1 - q^2 sin^2 a)
    t = max(-1.0, min(1.0, data.w0 / mu))
    c = math.copysign(abs(t) ** (p / (2.0 * p - 2.0)), t)
    R = (data.wdot0 / (mu * alpha * (2.0 - 2.0 / p))) ** 2
    if abs(c) <= 0.8:
        s_abs = math.sqrt(max(0.0, 1.0 - c * c))
    else:
        disc = math.sqrt(max(0.0, 1.0 - 4.0 * q * q * R))
        s_abs = math.sqrt(2.0 * R / (1.0 + disc))
    s = -s_abs if data.wdot0 > 0 else s_abs
    beta = float(ell.integral_from_trig("F1", p, q, s, c)[0])
    return Wavelike(p=p, lam=lam, A=A, alpha=alpha, beta=beta, q=q)


def _orbitlike(pot: Potential, data: InitialData) -> Orbitlike:
    p, lam = pot.p, pot.lam
    _, _, zeta, xi = level_roots(pot, data.D0)
    sg = _sgn(data.w0)
    A = sg * xi ** (1.0 / (p - 1.0))
    alpha = abs(A) / 2.0
    # 1 - q^2 = (zeta/xi)^(p/(p-1)) avoids the cancellation near q = 1
    q2 = min(max(1.0 - (zeta / xi) ** (p / (p - 1.0)), 0.0), 1.0)
    q = math.sqrt(q2)
    Dlev = (min(abs(data.w0) / xi, 1.0)) ** (p / (p - 1.0))
    v = min(max((1.0 - Dlev) / q2, 0.0), 1.0) if q2 > 0 else 0.0
    t = -data.wdot0 / (sg * xi * alpha * (2.0 - 2.0 / p) * q2) if q2 > 0 else 0.0
    # near the peak sqrt(v) only amplifies rounding, while w' fixes s*c
    if v <= 0.5:
        c = math.sqrt(1.0 - v)
        s = t / c
    else:
        s = math.copysign(math.sqrt(v), t)
        c = min(abs(t) / abs(s), 1.0)
    beta = float(ell.integral_from_trig("F2", p, q, s, c)[0])
    return Orbitlike(p=p, lam=lam, A=A, alpha=alpha, beta=beta, q=q)


def _loop_beta(pot: Potential, data: InitialData, sign: float) -> tuple[float, float]:
    """(A_pl, beta) for data on a sech_p loop of the given sign."""
    p, lam = pot.p, pot.lam
    A = amplitude_pl(p, lam)
    cw = (2.0 * A) ** (p - 1.0)
    C2 = min(abs(data.w0) / cw, 1.0) ** (p / (p - 1.0))
    c = math.sqrt(C2)
    t = -data.wdot0 / (sign * cw * A * (2.0 - 2.0 / p))
    if C2 >= 0.5:
        s = t / c
    else:
        s = math.copysign(math.sqrt(1.0 - C2), t) if t != 0 else math.sqrt(1.0 - C2)
    beta = float(ell.integral_from_trig("F1", p, 1.0, s, c)[0])
    return A, beta


def _coerce_data(pot: Potential, data) -> InitialData:
    if isinstance(data, InitialData):
        return initial_data(pot, data.w0, data.wdot0)
    w0, wdot0 = data
    return initial_data(pot, w0, wdot0)


def classify(p: float, lam: float, data, flatcore_hint: FlatCoreSpec | str | None = None) -> SolutionClass:
    """Return the solution class through the initial data ``(w0, wdot0)``.

    ``data`` is an :class:`InitialData` or a pair ``(w0, wdot0)``.  For
    ``p > 2``, ``lam > 0`` and zero data, pass ``flatcore_hint`` (a
    :class:`FlatCoreSpec`, or the string ``"linear"``) to pick between the
    straight line and a flat segment of a flat-core curve.
    """
    pot = Potential(float(p), float(lam))
    p, lam = pot.p, pot.lam
    data = _coerce_data(pot, data)
    if not (math.isfinite(data.w0) and math.isfinite(data.wdot0)):
        raise DomainError("initial data must be finite")
    hint_linear = isinstance(flatcore_hint, str)
    if hint_linear and flatcore_hint.lower() != "linear":
        raise DomainError(f"unknown hint {flatcore_hint!r}")

    zero_data = data.w0 == 0.0 and data.wdot0 == 0.0

    if zero_data:
        if p <= 2.0 or lam <= 0:
            result: SolutionClass = Linear(p=p, lam=lam)
        elif hint_linear:
            result = Linear(p=p, lam=lam)
        elif isinstance(flatcore_hint, FlatCoreSpec):
            A = amplitude_pl(p, lam)
            T = ell.complete("F1", p, 1.0) / A
            spec = flatcore_hint
            first = spec.lengths[0] + T
            result = FlatCore(p=p, lam=lam, spec=spec, A_pl=A, T_pl=T, centers=flatcore_centers(first, spec, T))
        else:
            raise AmbiguityError(
                "zero data with p > 2 and lambda > 0 fits both the straight line and a flat "
                "part of a flat-core curve; supply a FlatCoreSpec hint or 'linear'"
            )
        return result

    if hint_linear:
        raise DomainError("a 'linear' hint contradicts nonzero data")

    scale = _data_scale(pot, data)
    if not (_SCALE_LO <= scale <= _SCALE_HI):
        # classify the similar curve with unit-size data, then scale back
        c = 1.0 / scale
        small = classify(p, c**p * lam, (c ** (p - 1.0) * data.w0, c**p * data.wdot0), _scale_hint(flatcore_hint, 1.0 / c))
        return _rescale(small, scale, lam)

    # D0 is a sum of terms that cancel; compare it with their size
    mag = _level_magnitude(pot, data)
    if mag == 0.0:
        raise DomainError(
            "initial data are too small relative to lambda: the Hamiltonian level underflows, "
            "so the curve cannot be told apart from the zero solution in double precision"
        )
    eps = _LEVEL_RTOL * mag

    def loop() -> SolutionClass:
        sign = int(_sgn(data.w0))
        A, beta = _loop_beta(pot, data, sign)
        if p <= 2.0:
            return Borderline(p=p, lam=lam, sign=sign, beta=beta, A_pl=A)
        T = ell.complete("F1", p, 1.0) / A
        spec = flatcore_hint if isinstance(flatcore_hint, FlatCoreSpec) else FlatCoreSpec(1, (sign,), (0.0,))
        return FlatCore(p=p, lam=lam, spec=spec, A_pl=A, T_pl=T, centers=flatcore_centers(-beta / A, spec, T))

    def circle() -> SolutionClass:
        return Circular(p=p, lam=lam, k0=_sgn(data.w0) * (lam / (p - 1.0)) ** (1.0 / p))

    wave = lambda: _wavelike(pot, data)  # noqa: E731
    orbit = lambda: _orbitlike(pot, data)  # noqa: E731

    # Nominal family first.  Within a hair of the separatrix (or of the
    # well bottom) double precision cannot tell the neighbouring family
    # apart, so it is tried as well and the first faithful one wins.
    band = _BAND_RTOL * (mag + lam * lam)
    near_sep = lam > 0 and data.w0 != 0.0 and abs(data.D0) <= band
    if data.w0 == 0.0 or lam <= 0 or data.D0 > eps:
        order = [wave] + ([loop] if near_sep else [])
    elif data.D0 >= -eps:
        order = [loop, wave if data.D0 > 0 else orbit]
    elif data.D0 > pot.min_value + _WELL_RTOL * mag:
        order = [orbit] + ([loop] if near_sep else []) + ([circle] if data.D0 - pot.min_value <= band else [])
    else:
        order = [circle, orbit] if data.D0 > pot.min_value else [circle]

    if loop in order and p > 2.0 and isinstance(flatcore_hint, FlatCoreSpec):
        if flatcore_hint.signs[0] != int(_sgn(data.w0)):
            raise DomainError("flat-core hint: first loop sign disagrees with sgn(w0)")

    first_error = None
    for build in order:
        try:
            result = build()
            miss = _reconstruction_miss(result, data)
        except PElasticaError as exc:
            first_error = first_error or exc
            continue
        if miss is None:
            return result
        first_error = first_error or ToleranceError(miss)
    if near_sep or data.D0 - pot.min_value <= band:
        raise ToleranceError(
            f"data lie within {abs(data.D0) / (lam * lam):.1e} (relative) of a degenerate level; "
            f"no family reproduces them at 1e-8 ({first_error})"
        )
    raise first_error


def _reconstruction_miss(cls: SolutionClass, data: InitialData) -> str | None:
    """Why the class does not pass through the data at ``s = 0`` (``None`` if it does)."""
    _, w, wd = curvature_of(cls, 0.0)
    size = 1.0 + abs(data.w0) + abs(data.wdot0)
    ok = abs(w - data.w0) <= _POSTCHECK_TOL * size and abs(wd - data.wdot0) <= _POSTCHECK_TOL * size
    if ok and math.isfinite(w) and math.isfinite(wd):
        return None
    return f"{cls.family} reconstruction misses the data: w={w!r} vs {data.w0!r}, w'={wd!r} vs {data.wdot0!r}"


_LEVEL_RTOL = 1e-12
_BAND_RTOL = 1e-6
_WELL_RTOL = 16.0 * np.finfo(float).eps
_SCALE_LO, _SCALE_HI = 2.0**-20, 2.0**20


def _level_magnitude(pot: Potential, data: InitialData) -> float:
    p, x = pot.p, abs(data.w0)
    big = x ** (p / (p - 1.0))
    return p * p * data.wdot0**2 + (p - 1.0) ** 2 * big * big + 2.0 * abs(pot.lam) * (p - 1.0) * big


def _data_scale(pot: Potential, data: InitialData) -> float:
    """Curvature scale of the data: ``k -> c k(c s)`` divides it by ``c``."""
    p = pot.p
    return max(abs(data.w0) ** (1.0 / (p - 1.0)), abs(data.wdot0) ** (1.0 / p), abs(pot.lam) ** (1.0 / p))


def _scale_hint(hint, factor: float):
    if isinstance(hint, FlatCoreSpec):
        return FlatCoreSpec(hint.N, hint.signs, tuple(L * factor for L in hint.lengths))
    return hint


def _rescale(cls: SolutionClass, c: float, lam: float) -> SolutionClass:
    """Class of ``s -> c k(c s)`` given the class of ``k`` (``c`` scales arclength by ``1/c``)."""
    p = cls.p
    if isinstance(cls, Linear):
        return replace(cls, lam=lam)
    if isinstance(cls, Circular):
        return replace(cls, lam=lam, k0=c * cls.k0)
    if isinstance(cls, (Wavelike, Orbitlike)):
        return replace(cls, lam=lam, A=c * cls.A, alpha=c * cls.alpha)
    if isinstance(cls, Borderline):
        return replace(cls, lam=lam, A_pl=c * cls.A_pl)
    if isinstance(cls, FlatCore):
        spec = _scale_hint(cls.spec, 1.0 / c)
        return replace(cls, lam=lam, spec=spec, A_pl=c * cls.A_pl, T_pl=cls.T_pl / c,
                       centers=tuple(x / c for x in cls.centers))
    raise DomainError(f"not a solution class: {cls!r}")


def canonical_class(
    family: str, p: float, q: float | None = None, spec: FlatCoreSpec | None = None, sign: int = 1
) -> SolutionClass:
    """Representative of ``family`` with unit speed parameter and its matched multiplier.

    Wavelike and orbitlike use ``alpha = 1`` (so ``A = 2q`` and ``A = 2``),
    borderline and flat-core use ``A_{p,lam} = 1``, the circle has ``k = 1``.
    """
    p = ell._check_p(p)
    family = family.lower()
    if family == "linear":
        return Linear(p=p, lam=0.0)
    if family == "circular":
        return Circular(p=p, lam=p - 1.0, k0=float(sign))
    if family in ("wavelike", "orbitlike"):
        if q is None:
            raise DomainError(f"{family} needs a modulus q")
        q = ell._check_q(q)
        if family == "wavelike":
            if q == 0.0:
                raise DomainError("wavelike modulus must be positive")
            A = 2.0 * q
            lam = 2.0 * (p - 1.0) * A ** (p - 2.0) * (2.0 * q * q - 1.0)
            return Wavelike(p=p, lam=lam, A=sign * A, alpha=1.0, beta=0.0, q=q)
        if q == 1.0:
            raise DomainError("orbitlike modulus must be below 1")
        lam = 2.0 * (p - 1.0) * 2.0 ** (p - 2.0) * (2.0 - q * q)
        return Orbitlike(p=p, lam=lam, A=sign * 2.0, alpha=1.0, beta=0.0, q=q)
    lam = (p - 1.0) * 2.0 ** (p - 1.0)
    if family == "borderline":
        return Borderline(p=p, lam=lam, sign=int(sign), beta=0.0, A_pl=1.0)
    if family == "flatcore":
        if p <= 2.0:
            raise DomainError("flat-core curves exist only for p > 2")
        spec = spec if spec is not None else FlatCoreSpec(1, (int(sign),), (0.0,))
        T = ell.complete("F1", p, 1.0)
        centers = flatcore_centers(spec.lengths[0] + T, spec, T)
        return FlatCore(p=p, lam=lam, spec=spec, A_pl=1.0, T_pl=T, centers=centers)
    raise DomainError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# evaluation


def _signed_pow(x, e):
    return np.sign(x) * np.abs(x) ** e


def _loop_values(p, A, sign, x):
    """(k, w, w') of ``sign 2A sech_p(x)`` with ``x = A (s - center)``, ``|x| < K``."""
    st = ell._amplitude_state(1, p, x, 1.0)
    c = st.cos()
    sn = st.sin()
    k = sign * 2.0 * A * c ** (2.0 / p)
    amp = (2.0 * A) ** (p - 1.0)
    w = sign * amp * c ** (2.0 - 2.0 / p)
    wd = sign * amp * A * (-(2.0 - 2.0 / p)) * sn * c
    return k, w, wd


def curvature_of(cls: SolutionClass, s):
    """``(k, w, w')`` of the class at arclength ``s`` (scalar or array)."""
    s_arr = np.atleast_1d(np.asarray(s, float)).ravel()
    p = cls.p
    zeros = np.zeros(s_arr.size)
    if isinstance(cls, Linear):
        k, w, wd = zeros, zeros.copy(), zeros.copy()
    elif isinstance(cls, Circular):
        k = np.full(s_arr.size, cls.k0)
        w = _signed_pow(k, p - 1.0)
        wd = zeros
    elif isinstance(cls, Wavelike):
        st = ell._amplitude_state(1, p, cls.alpha * s_arr + cls.beta, cls.q)
        c, sn = st.cos(), st.sin()
        lead = np.abs(cls.A) ** (p - 2.0) * cls.A
        k = cls.A * _signed_pow(c, 2.0 / p)
        w = lead * _signed_pow(c, 2.0 - 2.0 / p)
        root = np.sqrt(c * c + (1.0 - cls.q) * (1.0 + cls.q) * sn * sn)
        wd = lead * cls.alpha * (-(2.0 - 2.0 / p)) * sn * root
    elif isinstance(cls, Orbitlike):
        st = ell._amplitude_state(2, p, cls.alpha * s_arr + cls.beta, cls.q)
        c, sn = st.cos(), st.sin()
        d = (c * c + (1.0 - cls.q) * (1.0 + cls.q) * sn * sn) ** (1.0 / p)
        lead = np.abs(cls.A) ** (p - 2.0) * cls.A
        k = cls.A * d
        w = lead * d ** (p - 1.0)
        wd = lead * cls.alpha * (-(2.0 - 2.0 / p)) * cls.q**2 * sn * c
    elif isinstance(cls, Borderline):
        k, w, wd = _loop_values(p, cls.A_pl, cls.sign, cls.A_pl * s_arr + cls.beta)
    elif isinstance(cls, FlatCore):
        k, w, wd = zeros.copy(), zeros.copy(), zeros.copy()
        K = ell.complete("F1", p, 1.0)
        for sign, center in zip(cls.spec.signs, cls.centers):
            x = cls.A_pl * (s_arr - center)
            inside = np.abs(x) < K
            if np.any(inside):
                kk, ww, wwd = _loop_values(p, cls.A_pl, sign, x[inside])
                k[inside] += kk
                w[inside] += ww
                wd[inside] += wwd
    else:
        raise DomainError(f"not a solution class: {cls!r}")
    if np.ndim(s) == 0:
        return float(k[0]), float(w[0]), float(wd[0])
    shape = np.shape(s)
    return k.reshape(shape), w.reshape(shape), wd.reshape(shape)


def curvature_zeros(cls: SolutionClass, s_lo: float, s_hi: float) -> np.ndarray:
    """Points of ``(s_lo, s_hi)`` where the curvature of the class changes regularity.

    These are the zeros of ``cn_p`` for wavelike classes and the loop edges
    of flat-core classes; other families have none.
    """
    if isinstance(cls, Wavelike):
        K = ell.complete("F1", cls.p, cls.q)
        lo = (cls.alpha * s_lo + cls.beta) / K
        hi = (cls.alpha * s_hi + cls.beta) / K
        odd = np.arange(math.floor(lo) - 1, math.ceil(hi) + 2)
        odd = odd[odd % 2 != 0]
        pts = (odd * K - cls.beta) / cls.alpha
    elif isinstance(cls, FlatCore):
        pts = np.array([c + d * cls.T_pl for c in cls.centers for d in (-1.0, 1.0)])
    else:
        pts = np.array([])
    pts = np.sort(pts)
    return pts[(pts > s_lo) & (pts < s_hi)]


# ---------------------------------------------------------------------------
# regularity


@dataclass(frozen=True)
class RegularityReport:
    """Optimal Sobolev regularity of a p-elastica of the given family.

    ``sobolev_order``/``sobolev_exponent`` state the positive result
    ``W^{order, r}`` for every ``r < exponent`` (``r = inf`` allowed when the
    exponent is ``inf``); ``fails_order``/``fails_exponent`` state the sharp
    failure ``not in W^{fails_order, fails_exponent}``.  All four are ``None``
    for analytic curves.
    """

    family: str
    p: float
    analytic: bool
    sobolev_order: int | None
    sobolev_exponent: float | None
    fails_order: int | None
    fails_exponent: float | None
    m_p: int
    r_p: float | None
    M_p: int | None
    R_p: float | None
    subcase: str

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("sobolev_exponent", "fails_exponent", "r_p", "R_p"):
            if d[key] is not None and math.isinf(d[key]):
                d[key] = "inf"
        return d


_ALWAYS_ANALYTIC = ("linear", "borderline", "orbitlike", "circular")


def regularity(p: float, family: str, interior_zero: bool = True) -> RegularityReport:
    """Regularity of a p-elastica of ``family`` on an interval.

    ``interior_zero`` says whether the interval contains a curvature zero
    (wavelike) or a loop edge (flat-core); without one the curve is analytic.
    """
    pp = ell.pparams(p)
    family = family.lower()
    base = dict(family=family, p=pp.p, m_p=pp.m_p, r_p=pp.r_p, M_p=pp.M_p, R_p=pp.R_p)
    analytic = dict(analytic=True, sobolev_order=None, sobolev_exponent=None, fails_order=None, fails_exponent=None)

    if family in _ALWAYS_ANALYTIC:
        return RegularityReport(**base, **analytic, subcase="analytic family")
    if family == "wavelike":
        if not interior_zero:
            return RegularityReport(**base, **analytic, subcase="no curvature zero")
        inv = 1.0 / (pp.p - 1.0)
        if ell.near_integer(inv):
            n = int(round(inv))
            if n % 2 == 1:
                return RegularityReport(**base, **analytic, subcase="1/(p-1) odd integer")
            return RegularityReport(
                **base, analytic=False, sobolev_order=pp.m_p + 2, sobolev_exponent=math.inf,
                fails_order=pp.m_p + 3, fails_exponent=1.0, subcase="1/(p-1) even integer",
            )
        return RegularityReport(
            **base, analytic=False, sobolev_order=pp.m_p + 2, sobolev_exponent=pp.r_p,
            fails_order=pp.m_p + 2, fails_exponent=pp.r_p, subcase="1/(p-1) not an integer",
        )
    if family == "flatcore":
        if pp.p <= 2.0:
            raise DomainError("flat-core curves exist only for p > 2")
        if not interior_zero:
            return RegularityReport(**base, **analytic, subcase="no loop edge")
        if pp.R_p is None:
            return RegularityReport(
                **base, analytic=False, sobolev_order=pp.M_p + 2, sobolev_exponent=math.inf,
                fails_order=pp.M_p + 3, fails_exponent=1.0, subcase="2/(p-2) integer",
            )
        return RegularityReport(
            **base, analytic=False, sobolev_order=pp.M_p + 2, sobolev_exponent=pp.R_p,
            fails_order=pp.M_p + 2, fails_exponent=pp.R_p, subcase="2/(p-2) not an integer",
        )
    raise DomainError(f"unknown family {family!r}")
