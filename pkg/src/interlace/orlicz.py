"""Orlicz functions, Luxemburg-style norms, iterated N-norms, and the delta transform.

An Orlicz function phi is continuous, non-decreasing, convex, with phi(0) = 0
and phi(t) -> infinity.  Its norm on finitely supported vectors is

    ||x||_phi = inf { r > 0 : sum_n phi(|x_n| / r) <= 1 },

computed here by bisection (the constraint sum is non-increasing in r).  For a
phi that is 1-Lipschitz with slope limit 1 at infinity, the two-variable rule

    N_2(s, t) = |s| + |s| phi(|t| / |s|)   (|t| when s = 0)

iterates left-nested into N_n, which is sandwiched between (1/2)||.||_phi and
e ||.||_phi.  The delta transform turns a convexity modulus d* (positive, with
d*(t)/t non-decreasing to 1) into an admissible phi via the integral
delta(t) = int_0^t d*(s)/s ds, which satisfies d*(t/2) <= delta(t) <= d*(t).

Structural properties of user functions are only checked on a finite grid;
black-box callables cannot be verified analytically, so validation returns a
report of observed violations instead of raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import InvalidInput, ResourceLimit

__all__ = [
    "OrliczSpec",
    "ModulusSpec",
    "ValidationReport",
    "LpComparisonReport",
    "default_grid",
    "validate_orlicz",
    "validate_modulus",
    "orlicz_norm",
    "n_norm",
    "delta_transform",
    "compare_lp",
    "orlicz_fixture",
    "modulus_fixture",
    "ORLICZ_FIXTURE_KEYS",
    "MODULUS_FIXTURE_KEYS",
]

MAX_BRACKET_STEPS = 64


@dataclass(frozen=True)
class OrliczSpec:
    """A scalar function [0, inf) -> [0, inf) with declared structural flags.

    The flags record what the supplier claims; validate_orlicz checks the
    claims on a grid.  n_norm requires both flags to be declared.  Callables
    must be safe to invoke concurrently.
    """

    fn: Callable[[float], float]
    is_one_lipschitz: bool = False
    slope_limit_one: bool = False
    name: str = ""


@dataclass(frozen=True)
class ModulusSpec:
    """A candidate convexity modulus: positive on (0, inf), fn(t)/t -> 1 increasingly."""

    fn: Callable[[float], float]
    name: str = ""


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class LpComparisonReport:
    side: str
    applicable: bool
    grid_constant: float
    worst_ratio: float
    n_samples: int
    note: str = ""


def default_grid(lo: float = 1e-6, hi: float = 1e3, n: int = 512) -> np.ndarray:
    """Geometric validation grid; 512 points over [1e-6, 1e3] by default."""
    return np.geomspace(lo, hi, n)


def _slack(v: float, rel_tol: float) -> float:
    return rel_tol * max(1.0, abs(v))


def validate_orlicz(
    spec: OrliczSpec,
    grid: Sequence[float] | None = None,
    rel_tol: float = 1e-9,
    slope_tol: float = 0.1,
) -> ValidationReport:
    """Grid checks: phi(0)=0, monotonicity, midpoint convexity, declared flags."""
    g = np.asarray(default_grid() if grid is None else grid, dtype=float)
    if g.ndim != 1 or len(g) < 2 or np.any(g <= 0) or np.any(np.diff(g) <= 0):
        raise InvalidInput("grid must be sorted, positive, with >= 2 points")
    fn = spec.fn
    bad: list[str] = []

    v0 = fn(0.0)
    if abs(v0) > 1e-12:
        bad.append(f"phi(0) = {v0:g} != 0")

    vals = np.array([fn(t) for t in g])
    for i in range(len(g) - 1):
        a, b = g[i], g[i + 1]
        fa, fb = vals[i], vals[i + 1]
        if fb < fa - _slack(fa, rel_tol):
            bad.append(f"not non-decreasing on [{a:g}, {b:g}]")
        mid = fn(0.5 * (a + b))
        if mid > 0.5 * (fa + fb) + _slack(fa + fb, rel_tol):
            bad.append(f"midpoint convexity fails on [{a:g}, {b:g}]")
        if spec.is_one_lipschitz and abs(fb - fa) > (b - a) + _slack(b - a, rel_tol):
            bad.append(f"not 1-Lipschitz on [{a:g}, {b:g}]")
    if spec.is_one_lipschitz and vals[0] > g[0] + _slack(g[0], rel_tol):
        bad.append("not 1-Lipschitz near 0")
    if spec.slope_limit_one:
        ratio = vals[-1] / g[-1]
        if abs(ratio - 1.0) > slope_tol:
            bad.append(f"phi(t)/t = {ratio:g} at t = {g[-1]:g}; slope limit 1 not visible")
    return ValidationReport(tuple(bad))


def validate_modulus(
    spec: ModulusSpec,
    grid: Sequence[float] | None = None,
    rel_tol: float = 1e-9,
    slope_tol: float = 0.1,
) -> ValidationReport:
    """Grid checks: positivity, fn(t)/t non-decreasing, ratio approaching 1."""
    g = np.asarray(default_grid() if grid is None else grid, dtype=float)
    fn = spec.fn
    bad: list[str] = []
    vals = np.array([fn(t) for t in g])
    if np.any(vals <= 0):
        t = g[int(np.argmax(vals <= 0))]
        bad.append(f"not positive at t = {t:g}")
    ratios = vals / g
    for i in range(len(g) - 1):
        if ratios[i + 1] < ratios[i] - _slack(ratios[i], rel_tol):
            bad.append(f"ratio fn(t)/t decreases on [{g[i]:g}, {g[i+1]:g}]")
    if np.any(ratios > 1.0 + rel_tol):
        bad.append("ratio fn(t)/t exceeds 1")
    if abs(ratios[-1] - 1.0) > slope_tol:
        bad.append(f"ratio fn(t)/t = {ratios[-1]:g} at t = {g[-1]:g}; limit 1 not visible")
    return ValidationReport(tuple(bad))


def orlicz_norm(x: Sequence[float], spec: OrliczSpec, tol: float = 1e-10) -> float:
    """Luxemburg value inf { r : sum phi(|x_n|/r) <= 1 }, within `tol` of the infimum.

    Bracket by doubling/halving from max|x_n|, then bisect.  The returned value
    is the feasible (upper) end of the final bracket.  Bisection stops early if
    the bracket collapses to adjacent floats, so very large scales terminate.
    """
    if tol <= 0:
        raise InvalidInput("tol must be positive")
    xs = [abs(float(v)) for v in x if float(v) != 0.0]
    if not xs:
        return 0.0
    fn = spec.fn

    def total(r: float) -> float:
        return sum(fn(v / r) for v in xs)

    hi = max(xs)
    lo = hi
    if total(hi) > 1.0:
        for _ in range(MAX_BRACKET_STEPS):
            lo, hi = hi, hi * 2.0
            if total(hi) <= 1.0:
                break
        else:
            raise ResourceLimit("bracket search exceeded the doubling cap")
    else:
        found = False
        for _ in range(MAX_BRACKET_STEPS):
            hi, lo = lo, lo / 2.0
            if total(lo) > 1.0:
                found = True
                break
        if not found:
            return 0.0  # the constraint holds for every r > 0: the infimum is 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if total(mid) <= 1.0:
            hi = mid
        else:
            lo = mid
    return hi


def n_norm(s: Sequence[float], spec: OrliczSpec) -> float:
    """Left-nested N-norm N_n(s_1, ..., s_n); N_1 is |s_1|.

    Requires the is_one_lipschitz and slope_limit_one declarations: without
    slope limit 1 the rule |s|(1 + phi(|t|/|s|)) loses control of large |t|
    against small |s| and the Orlicz sandwich genuinely fails.
    """
    if not (spec.is_one_lipschitz and spec.slope_limit_one):
        raise InvalidInput(
            "n_norm requires an OrliczSpec declared 1-Lipschitz with slope limit 1"
        )
    vals = [float(v) for v in s]
    if not vals:
        raise InvalidInput("n_norm needs at least one coordinate")
    fn = spec.fn
    acc = abs(vals[0])
    for t in vals[1:]:
        if acc == 0.0:
            acc = abs(t)
        else:
            acc = acc + acc * fn(abs(t) / acc)
    return acc


def delta_transform(mod: ModulusSpec, t: float, steps: int = 256) -> float:
    """delta(t) = integral of mod(s)/s over (0, t], composite midpoint rule.

    The integrand is non-decreasing, so the head piece over [0, eps] with
    eps = t/steps^2 is bounded by eps * mod(eps)/eps = mod(eps); that bound is
    used as the head contribution and keeps the total error well under 1% for
    smooth moduli at the default resolution.
    """
    t = float(t)
    if t < 0:
        raise InvalidInput("t must be non-negative")
    if steps < 16:
        raise InvalidInput("steps must be >= 16")
    if t == 0.0:
        return 0.0
    fn = mod.fn
    eps = t / (steps * steps)
    h = (t - eps) / steps
    acc = fn(eps)  # head bound over [0, eps]
    for i in range(steps):
        mid = eps + (i + 0.5) * h
        acc += fn(mid) / mid * h
    return acc


def _lp_norm(x: Sequence[float], p: float) -> float:
    return sum(abs(float(v)) ** p for v in x) ** (1.0 / p)


def compare_lp(
    spec: OrliczSpec,
    p: float,
    side: str,
    samples: Sequence[Sequence[float]],
    grid: Sequence[float] | None = None,
    tol: float = 1e-10,
    use_n_norm: bool = False,
) -> LpComparisonReport:
    """Empirical comparison of the Orlicz norm against the l_p norm.

    side="upper": hypothesis phi(t) <= C t^p on (0, 1] -> reports the largest
    sample ratio ||x||_phi / ||x||_p.  side="lower": hypothesis phi(t) >= c t^p
    -> reports the smallest ratio.  The hypothesis is screened on the grid
    restricted to (0, 1]: a ratio phi(t)/t^p that peaks at the left edge and
    exceeds its value at the right edge by more than a factor 10 is treated as
    blowing up toward 0 (upper side inapplicable), and symmetrically for a
    ratio vanishing toward 0 on the lower side.

    With use_n_norm=True the numerator is the iterated N-norm instead (spec
    must then carry the admissibility flags); the N-norm inherits both
    comparisons from the Orlicz ones through the [1/2, e] sandwich, at the
    cost of those factors in the constants.
    """
    if side not in ("upper", "lower"):
        raise InvalidInput("side must be 'upper' or 'lower'")
    g = np.asarray(default_grid() if grid is None else grid, dtype=float)
    g01 = g[(g > 0) & (g <= 1.0)]
    if len(g01) < 8:
        raise InvalidInput("grid must contain at least 8 points in (0, 1]")
    ratios = np.array([spec.fn(t) / t**p for t in g01])
    if side == "upper":
        grid_constant = float(ratios.max())
        diverging = ratios[0] == ratios.max() and ratios[0] > 10.0 * ratios[-1]
        applicable = not diverging
        note = "" if applicable else "phi(t)/t^p blows up toward 0; no upper constant"
    else:
        grid_constant = float(ratios.min())
        vanishing = ratios[0] == ratios.min() and ratios[0] * 10.0 < ratios[-1]
        applicable = not vanishing
        note = "" if applicable else "phi(t)/t^p vanishes toward 0; no lower constant"

    worst = math.nan
    count = 0
    for vec in samples:
        lp = _lp_norm(vec, p)
        if lp == 0.0:
            continue
        top = n_norm(vec, spec) if use_n_norm else orlicz_norm(vec, spec, tol)
        ratio = top / lp
        if not math.isfinite(ratio):
            raise AssertionError("non-finite norm ratio encountered")
        count += 1
        if math.isnan(worst):
            worst = ratio
        elif side == "upper":
            worst = max(worst, ratio)
        else:
            worst = min(worst, ratio)
    return LpComparisonReport(side, applicable, grid_constant, worst, count, note)


# ---------------------------------------------------------------------------
# Built-in fixtures, selectable by string key from the CLI and the demos.
# ---------------------------------------------------------------------------

def _huber(t: float) -> float:
    # quadratic head, unit-slope tail: the simplest admissible nontrivial phi
    return 0.5 * t * t if t <= 1.0 else t - 0.5


_ORLICZ_FIXTURES: dict[str, OrliczSpec] = {
    "identity": OrliczSpec(lambda t: t, True, True, "identity"),
    "square": OrliczSpec(lambda t: t * t, False, False, "square"),
    "sqrt": OrliczSpec(math.sqrt, False, False, "sqrt"),
    "log1p": OrliczSpec(math.log1p, True, False, "log1p"),
    "huber": OrliczSpec(_huber, True, True, "huber"),
    "t_minus_log1p": OrliczSpec(
        lambda t: t - math.log1p(t), True, True, "t_minus_log1p"
    ),
}

ORLICZ_FIXTURE_KEYS = tuple(sorted(_ORLICZ_FIXTURES)) + ("pow:<p>",)

_MODULUS_FIXTURES: dict[str, ModulusSpec] = {
    "identity": ModulusSpec(lambda s: s, "identity"),
    "rational": ModulusSpec(lambda s: s * s / (1.0 + s), "rational"),
}

MODULUS_FIXTURE_KEYS = tuple(sorted(_MODULUS_FIXTURES))


def orlicz_fixture(key: str) -> OrliczSpec:
    """Built-in Orlicz function by key; "pow:<p>" gives t^p (for l_p comparisons)."""
    if key in _ORLICZ_FIXTURES:
        return _ORLICZ_FIXTURES[key]
    if key.startswith("pow:"):
        p = float(key.split(":", 1)[1])
        if p < 1.0:
            raise InvalidInput("pow fixtures need p >= 1")
        flags = p == 1.0
        return OrliczSpec(lambda t, _p=p: t**_p, flags, flags, key)
    raise InvalidInput(f"unknown Orlicz fixture {key!r}; known: {ORLICZ_FIXTURE_KEYS}")


def modulus_fixture(key: str) -> ModulusSpec:
    """Built-in convexity modulus by key."""
    if key in _MODULUS_FIXTURES:
        return _MODULUS_FIXTURES[key]
    raise InvalidInput(f"unknown modulus fixture {key!r}; known: {MODULUS_FIXTURE_KEYS}")
