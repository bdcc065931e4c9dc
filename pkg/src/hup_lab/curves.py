"""Measures on the exponential curve ``y = exp(t**2)`` and its n = 2 surface.

A density ``g`` on the curve has the two-variable transform

    mu_hat(x, y) = integral g(t) * exp(-i*pi*(x*t + y*exp(t**2))) dt.

Restricted to a slanted line ``y = c*x`` the phase completes to a square:
``x*t + c*x*exp(t**2) = c*x*H(t) - x/(4c)`` with

    H(t) = exp(t**2) + t/c + 1/(4*c**2)
         = (t + 1/(2c))**2 + exp(t**2) - t**2,

which is strictly convex (H'' = (2 + 4t**2) exp(t**2) > 0) and, because
``exp(s) >= 1 + s``, satisfies ``H >= 1`` everywhere.  Substituting
``u = sqrt(H(t))`` branch by branch turns the restricted transform into a
Fresnel-type integral of the profile returned by :func:`odd_profile`; the
transform vanishes along the whole line exactly when that profile is odd.

All densities on the curve are *defined* to vanish outside
``[-support_radius, support_radius]``, so truncating the integral there is
exact rather than approximate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from .config import OSC_BUDGET, PHASE_PER_PANEL, SUPPORT_RADIUS, TOL
from .errors import (
    BelowMinimumError,
    DegenerateWitnessError,
    NonpositiveMinimumError,
    OscillationBudgetError,
    WitnessConstructionError,
)
from .measures import Density, odd_pair, triangle

__all__ = [
    "LinePhase",
    "line_phase",
    "CurveDensity",
    "QuadResult",
    "odd_profile",
    "construct_single_line_witness",
    "standard_witness_profile",
    "exp_curve_ft",
    "surface_ft",
    "absolute_mass",
]

_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order not in _GL_CACHE:
        _GL_CACHE[order] = np.polynomial.legendre.leggauss(order)
    return _GL_CACHE[order]


def _bracketed_root(
    fun: Callable[[float], float],
    dfun: Callable[[float], float],
    lo: float,
    hi: float,
    ftol: float,
    max_iter: int = 200,
) -> float:
    """Newton iteration safeguarded by a sign-changing bracket [lo, hi]."""
    flo = fun(lo)
    if abs(flo) <= ftol:
        return lo
    fhi = fun(hi)
    if abs(fhi) <= ftol:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError("root is not bracketed")
    t = 0.5 * (lo + hi)
    for _ in range(max_iter):
        ft = fun(t)
        if abs(ft) <= ftol:
            return t
        if (ft > 0) == (fhi > 0):
            hi, fhi = t, ft
        else:
            lo, flo = t, ft
        d = dfun(t)
        t_next = 0.5 * (lo + hi)
        if d != 0:
            candidate = t - ft / d
            if min(lo, hi) < candidate < max(lo, hi):
                t_next = candidate
        t = t_next
    raise ArithmeticError("root solve did not converge")


@dataclass(frozen=True)
class LinePhase:
    """Completed-square phase for the slanted line ``y = c*x``.

    ``t_min`` is the unique minimiser (the root of ``2*t*exp(t**2) = -1/c``)
    and ``h_min = value(t_min) >= 1`` is the minimum value.  Build through
    :func:`line_phase`, which solves for both.
    """

    c: float
    t_min: float
    h_min: float

    @property
    def sqrt_min(self) -> float:
        return math.sqrt(self.h_min)

    def value(self, t):
        t = np.asarray(t, dtype=float)
        out = np.exp(t * t) + t / self.c + 1.0 / (4.0 * self.c * self.c)
        return float(out) if out.ndim == 0 else out

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        out = 2.0 * t * np.exp(t * t) + 1.0 / self.c
        return float(out) if out.ndim == 0 else out

    def inverse(self, v: float, branch: str) -> float:
        """Solve ``value(t) = v`` on one side of the minimum.

        ``branch='right'`` returns ``t >= t_min``; ``branch='left'`` returns
        ``t <= t_min``.  The result satisfies ``|value(t) - v| <=
        1e-12 * max(1, v)``.  Values below ``h_min`` raise
        ``BelowMinimumError``.
        """
        if branch not in ("left", "right"):
            raise ValueError("branch must be 'left' or 'right'")
        v = float(v)
        ftol = 1e-13 * max(1.0, abs(v))
        if v < self.h_min - 1e-12 * max(1.0, abs(v)):
            raise BelowMinimumError(
                f"value {v} lies below the phase minimum {self.h_min}"
            )
        if v <= self.h_min:
            return self.t_min
        c = self.c

        def fun(t: float) -> float:
            return math.exp(t * t) + t / c + 1.0 / (4.0 * c * c) - v

        def dfun(t: float) -> float:
            return 2.0 * t * math.exp(t * t) + 1.0 / c

        step = 1.0
        if branch == "right":
            hi = self.t_min + step
            while fun(hi) < 0:
                step *= 2.0
                hi = self.t_min + step
            return _bracketed_root(fun, dfun, self.t_min, hi, ftol)
        lo = self.t_min - step
        while fun(lo) < 0:
            step *= 2.0
            lo = self.t_min - step
        return _bracketed_root(fun, dfun, lo, self.t_min, ftol)


def line_phase(c: float) -> LinePhase:
    """Construct the phase record for slope ``c != 0``.

    The minimiser is found by safeguarded Newton on the derivative to an
    equation defect below 1e-13 * max(1, 1/|c|).
    """
    c = float(c)
    if c == 0:
        raise ValueError("the slanted line needs a nonzero slope")

    def fun(t: float) -> float:
        return 2.0 * t * math.exp(t * t) + 1.0 / c

    def dfun(t: float) -> float:
        return (2.0 + 4.0 * t * t) * math.exp(t * t)

    ftol = 1e-13 * max(1.0, abs(1.0 / c))
    bound = 1.0
    if c > 0:
        # fun(0) = 1/c > 0 and fun(-B) -> -inf
        while fun(-bound) >= 0:
            bound *= 2.0
        t_min = _bracketed_root(fun, dfun, -bound, 0.0, ftol)
    else:
        while fun(bound) <= 0:
            bound *= 2.0
        t_min = _bracketed_root(fun, dfun, 0.0, bound, ftol)
    h_min = math.exp(t_min * t_min) + t_min / c + 1.0 / (4.0 * c * c)
    if not h_min > 0:
        # unreachable: exp(s) >= 1 + s forces h >= 1; kept as a hard guard
        raise NonpositiveMinimumError(f"phase minimum {h_min} is not positive")
    return LinePhase(c, t_min, h_min)


@dataclass(frozen=True)
class CurveDensity:
    """Density on the exponential curve, in one of two representations.

    Either a plain atom ``mixture`` (truncated at ``support_radius``), or a
    witness pair ``(phase, profile)`` encoding

        g(t) = profile(sqrt(H(t))) * H'(t) / (2 * sqrt(H(t))),

    the pull-back of an odd profile through the square-root substitution.
    """

    mixture: Density | None = None
    phase: LinePhase | None = None
    profile: Density | None = None
    support_radius: float = SUPPORT_RADIUS

    def __post_init__(self):
        object.__setattr__(self, "support_radius", float(self.support_radius))
        if not self.support_radius > 0:
            raise ValueError("support radius must be positive")
        has_mixture = self.mixture is not None
        has_witness = self.phase is not None and self.profile is not None
        if has_mixture == has_witness:
            raise ValueError("need exactly one of mixture or (phase, profile)")

    @classmethod
    def from_density(
        cls, f: Density, support_radius: float = SUPPORT_RADIUS
    ) -> "CurveDensity":
        return cls(mixture=f, support_radius=support_radius)

    def is_witness(self) -> bool:
        return self.mixture is None

    def value_at(self, t):
        arr = np.asarray(t, dtype=float)
        scalar = arr.ndim == 0
        arr = np.atleast_1d(arr)
        if self.mixture is not None:
            val = np.asarray(self.mixture.value_at(arr), dtype=complex)
        else:
            v = self.phase.value(arr)
            u = np.sqrt(v)
            val = (
                np.asarray(self.profile.value_at(u), dtype=complex)
                * self.phase.derivative(arr)
                / (2.0 * u)
            )
        val = np.where(np.abs(arr) <= self.support_radius, val, 0j)
        return val[0].item() if scalar else val

    @cached_property
    def _pieces(self) -> tuple[tuple[float, float], ...]:
        return self._compute_pieces()

    def smooth_pieces(self) -> tuple[tuple[float, float], ...]:
        """Disjoint intervals covering the support, smooth in their interiors."""
        return self._pieces

    def _compute_pieces(self) -> tuple[tuple[float, float], ...]:
        radius = self.support_radius
        if self.mixture is not None:
            spans = self.mixture.support_intervals()
            if spans is None:
                spans = ((-radius, radius),)
            else:
                spans = tuple(
                    (max(lo, -radius), min(hi, radius))
                    for lo, hi in spans
                    if lo < radius and hi > -radius
                )
            cuts = sorted(set(self.mixture.breakpoints()))
            pieces = []
            for lo, hi in spans:
                knots = [lo] + [b for b in cuts if lo < b < hi] + [hi]
                pieces.extend(
                    (a, b) for a, b in zip(knots, knots[1:]) if b > a
                )
            return tuple(pieces)

        # witness representation: map positive profile knots through both branches
        spans = self.profile.support_intervals()
        if spans is None:
            raise WitnessConstructionError("witness profile must be compact")
        cuts = sorted(set(self.profile.breakpoints()))
        pieces = []
        for lo, hi in spans:
            if hi <= 0:
                continue  # mirrored half; covered through the left branch
            knots = [lo] + [b for b in cuts if lo < b < hi] + [hi]
            right = [self.phase.inverse(k * k, "right") for k in knots]
            left = [self.phase.inverse(k * k, "left") for k in knots]
            pieces.extend((a, b) for a, b in zip(right, right[1:]) if b > a)
            left = left[::-1]
            pieces.extend((a, b) for a, b in zip(left, left[1:]) if b > a)
        pieces = [
            (max(lo, -radius), min(hi, radius))
            for lo, hi in sorted(pieces)
            if lo < radius and hi > -radius
        ]
        return tuple(pieces)


@dataclass(frozen=True)
class QuadResult:
    """Quadrature value with its accumulated error estimate."""

    value: complex
    error: float


def _panel_sums(fun, a, b, n_panels, order):
    nodes, weights = _gl(order)
    edges = np.linspace(a, b, n_panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    t = mid[:, None] + half[:, None] * nodes[None, :]
    v = fun(t.reshape(-1)).reshape(t.shape)
    return (v @ weights) * half


def _chopped(piece: tuple[float, float], max_len: float = 0.5):
    """Split a piece into short chunks so the local phase-rate bound is tight."""
    a, b = piece
    n = max(1, math.ceil((b - a) / max_len))
    edges = np.linspace(a, b, n + 1)
    return zip(edges[:-1], edges[1:])


def _oscillatory_sum(fun, pieces, x, y, abs_tol):
    for attempt in range(4):
        factor = 2**attempt
        total = 0j
        err = 0.0
        for piece in pieces:
            for a, b in _chopped(piece):
                m = max(abs(a), abs(b))
                rate = math.pi * (abs(x) + 2.0 * abs(y) * m * math.exp(m * m))
                n_panels = factor * max(
                    1, math.ceil((b - a) * rate / PHASE_PER_PANEL)
                )
                coarse = _panel_sums(fun, a, b, n_panels, 7)
                fine = _panel_sums(fun, a, b, n_panels, 15)
                total += complex(fine.sum())
                err += float(np.abs(fine - coarse).sum())
        if err <= abs_tol:
            break
    return QuadResult(total, err)


def exp_curve_ft(
    g: CurveDensity, x: float, y: float, *, abs_tol: float = TOL.quad_abs
) -> QuadResult:
    """Transform of a curve density at frequency ``(x, y)``.

    Panels are sized so the oscillatory phase ``pi*(x*t + y*exp(t**2))``
    advances at most pi/4 per panel, then integrated by paired
    Gauss-Legendre rules; the reported error is the sum of the pairwise
    rule differences.  Frequencies whose oscillation ``|y| * exp(T**2)``
    exceeds the documented budget are refused outright rather than
    returning an untrusted number.
    """
    x = float(x)
    y = float(y)
    radius = g.support_radius
    if radius * radius > 700.0 or abs(y) * math.exp(radius * radius) > OSC_BUDGET:
        raise OscillationBudgetError(
            f"|y|*exp(T^2) = {abs(y):.3g}*exp({radius:.3g}^2) exceeds the "
            f"oscillation budget {OSC_BUDGET:.6g}"
        )
    pieces = g.smooth_pieces()
    if not pieces:
        return QuadResult(0j, 0.0)

    def integrand(t: np.ndarray) -> np.ndarray:
        phase = np.exp(-1j * math.pi * (x * t + y * np.exp(t * t)))
        return phase * g.value_at(t)

    return _oscillatory_sum(integrand, pieces, x, y, abs_tol)


def absolute_mass(g: CurveDensity, *, abs_tol: float = TOL.quad_abs) -> QuadResult:
    """Integral of ``|g|`` over the support (non-oscillatory panels)."""
    pieces = g.smooth_pieces()
    if not pieces:
        return QuadResult(0j, 0.0)

    def integrand(t: np.ndarray) -> np.ndarray:
        return np.abs(g.value_at(t)).astype(complex)

    # x=4 sets a floor of ~16 panels per unit length for the smooth integrand
    return _oscillatory_sum(integrand, pieces, 4.0, 0.0, abs_tol)


def odd_profile(g: CurveDensity, c: float, u, *, offset: float = 0.0):
    """Profile of ``g`` in the square-root variable of the line ``y = c*x``.

    For ``|u| > sqrt(h_min)`` this is ``g(t(u)) * 2u / H'(t(u))`` where
    ``t(u)`` inverts ``H(t) = u**2`` on the right branch for ``u > 0`` and
    the left branch for ``u < 0``; inside the fold it is 0.  The transform
    of ``g`` vanishes on the whole line ``y = c*x`` exactly when this
    profile is an odd function of ``u``.

    With ``offset = d`` the density is first modulated by
    ``exp(-i*pi*d*exp(t**2))``, which produces the analogous profile for
    the parallel line ``y = c*x + d``.
    """
    c = float(c)
    if g.phase is not None and g.phase.c == c:
        phase = g.phase
    else:
        phase = line_phase(c)

    def single(uv: float) -> complex:
        if abs(uv) <= phase.sqrt_min:
            return 0j
        branch = "right" if uv > 0 else "left"
        t = phase.inverse(uv * uv, branch)
        d = phase.derivative(t)
        if d == 0:
            return 0j
        val = complex(g.value_at(t)) * (2.0 * uv) / d
        if offset:
            val *= cmath.exp(-1j * math.pi * offset * math.exp(t * t))
        return val

    arr = np.asarray(u, dtype=float)
    if arr.ndim == 0:
        return single(float(arr))
    return np.array([single(float(v)) for v in arr.reshape(-1)]).reshape(arr.shape)


def standard_witness_profile(
    c: float, *, gap: float = 0.2, width: float = 0.5, amplitude: complex = 1.0
) -> Density:
    """Odd triangle-pair profile clearing the fold of the slope-``c`` phase.

    The positive lobe is a triangle supported on
    ``[sqrt(h_min) + gap, sqrt(h_min) + gap + 2*width]``.
    """
    phase = line_phase(c)
    lobe = triangle(
        center=phase.sqrt_min + gap + width, width=width, amplitude=amplitude
    )
    return odd_pair(lobe)


def construct_single_line_witness(
    c: float, phi: Density, *, gap_min: float = 1e-3
) -> CurveDensity:
    """Curve density whose transform vanishes on the single line ``y = c*x``.

    ``phi`` must be odd, compactly supported, and clear the fold:
    ``|u| >= sqrt(h_min) + gap_min`` on its support.  The witness is the
    pull-back of ``phi`` through the square-root substitution, so its
    profile *is* ``phi`` and the line-restricted transform is the integral
    of an odd function.
    """
    phase = line_phase(c)
    if phi.is_zero():
        raise DegenerateWitnessError("witness profile is zero")
    spans = phi.support_intervals()
    if spans is None:
        raise WitnessConstructionError("witness profile must be compactly supported")
    need = phase.sqrt_min + float(gap_min)
    for lo, hi in spans:
        if not (lo >= need or hi <= -need):
            raise WitnessConstructionError(
                f"profile support [{lo:.6g}, {hi:.6g}] enters the fold region "
                f"(|u| < {need:.6g})"
            )
    extent = max(max(abs(lo), abs(hi)) for lo, hi in spans)
    grid = np.linspace(0.0, extent, 1025)
    odd_defect = np.max(np.abs(phi.value_at(grid) + phi.value_at(-grid)))
    scale = max(1.0, float(np.max(np.abs(phi.value_at(grid)))))
    if odd_defect > 1e-12 * scale:
        raise WitnessConstructionError("witness profile is not odd")
    t_right = phase.inverse(extent * extent, "right")
    t_left = phase.inverse(extent * extent, "left")
    radius = max(abs(t_left), abs(t_right))
    return CurveDensity(phase=phase, profile=phi, support_radius=radius)


def surface_ft(
    tau_density: CurveDensity | Density,
    h_density: CurveDensity | Density,
    x: Sequence[float],
    *,
    abs_tol: float = TOL.quad_abs,
) -> QuadResult:
    """Transform of the separable density ``tau(u1)*h(u2)`` on the surface
    ``x3 = exp(u1**2) + exp(u2**2)`` at a frequency 3-vector.

    The kernel ``exp(-i*pi*(x1*u1 + x2*u2 + x3*(exp(u1^2) + exp(u2^2))))``
    factorises over the two coordinates, so the tensor-product panel rule
    collapses to the product of two curve transforms; the error bound
    combines both factors' estimates.
    """
    x = tuple(float(v) for v in x)
    if len(x) != 3:
        raise ValueError("need a frequency 3-vector (x1, x2, x3)")
    if isinstance(tau_density, Density):
        tau_density = CurveDensity.from_density(tau_density)
    if isinstance(h_density, Density):
        h_density = CurveDensity.from_density(h_density)
    first = exp_curve_ft(tau_density, x[0], x[2], abs_tol=abs_tol)
    second = exp_curve_ft(h_density, x[1], x[2], abs_tol=abs_tol)
    value = first.value * second.value
    error = (
        abs(first.value) * second.error
        + abs(second.value) * first.error
        + first.error * second.error
    )
    return QuadResult(value, error)
