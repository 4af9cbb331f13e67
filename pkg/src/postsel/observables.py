"""Photon statistics and quadrature squeezing from Fock sums.

Quadrature convention: X_phi = (a e^{-i phi} + a† e^{i phi}) / sqrt(2), so
[X_phi, X_{phi+pi/2}] = i and the vacuum variance is 1/2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._config import TOL
from .errors import InvariantViolation, TruncationOverflow, VacuumUndefined
from .fock import FockVector


@dataclass(frozen=True)
class LadderMoments:
    """<a>, <a^2>, <a†a>, <a†^2 a^2> of a normalized state."""

    a: complex
    a2: complex
    n: float
    a2a2: float


def photon_distribution(v: FockVector) -> np.ndarray:
    return v.probabilities()


def ladder_moments(v: FockVector) -> LadderMoments:
    amps = v.amps
    p = np.abs(amps) ** 2
    n = np.arange(v.dim, dtype=float)
    a = np.vdot(amps[:-1], np.sqrt(n[1:]) * amps[1:])
    a2 = np.vdot(amps[:-2], np.sqrt(n[1:-1] * n[2:]) * amps[2:])
    return LadderMoments(complex(a), complex(a2), float(np.dot(n, p)),
                         float(np.dot(n * (n - 1), p)))


def mean_number(v: FockVector) -> float:
    return float(np.dot(np.arange(v.dim), v.probabilities()))


def g2(v: FockVector) -> float:
    """<a†a†aa> / <a†a>^2."""
    m = ladder_moments(v)
    if m.n <= TOL.vacuum_mean:
        raise VacuumUndefined(f"g2 undefined for <n> = {m.n:.3g}")
    return m.a2a2 / m.n ** 2


def mandel_from_moments(m: LadderMoments) -> float:
    if m.n == 0.0:
        return 0.0  # vacuum limit
    return (m.a2a2 - m.n ** 2) / m.n


def mandel_q(v: FockVector) -> float:
    """(Var n - <n>) / <n>, equal to <n>(g2 - 1); 0 for the vacuum."""
    return mandel_from_moments(ladder_moments(v))


def _require_headroom(v: FockVector):
    if v.tail_mass >= TOL.displace_tail:
        raise TruncationOverflow(f"quadrature moments need headroom (tail_mass {v.tail_mass:.3g})")


def _quadrature(m: LadderMoments, phi: float) -> tuple[float, float]:
    rot = complex(math.cos(phi), -math.sin(phi))
    mean_x = math.sqrt(2.0) * (m.a * rot).real
    mean_x2 = 0.5 * (2.0 * (m.a2 * rot * rot).real + 2.0 * m.n + 1.0)
    return mean_x, mean_x2


def quadrature_moments(v: FockVector, phi_quad: float) -> tuple[float, float]:
    _require_headroom(v)
    return _quadrature(ladder_moments(v), phi_quad)


def squeezing_from_moments(m: LadderMoments, phi: float) -> float:
    # normal-ordered form avoids the 1/2 - 1/2 cancellation
    rot = complex(math.cos(phi), -math.sin(phi))
    mean_x = math.sqrt(2.0) * (m.a * rot).real
    return (m.a2 * rot * rot).real + m.n - mean_x ** 2


def squeezing_parameter(v: FockVector, phi_quad: float) -> float:
    """S_phi = Var(X_phi) - 1/2; negative means squeezed."""
    _require_headroom(v)
    return squeezing_from_moments(ladder_moments(v), phi_quad)


def default_phi_grid(count: int = 64) -> np.ndarray:
    return np.arange(count) * (math.pi / count)


@dataclass(frozen=True)
class ObservableReport:
    photon_dist: np.ndarray
    mean_n: float
    g2: Optional[float]
    mandel_q: float
    s_phi: list = field(default_factory=list)  # (phi_quad, S_phi) pairs
    success_prob: Optional[float] = None


def full_report(v: FockVector, phi_grid=None, success_prob: Optional[float] = None) -> ObservableReport:
    """All observables of a normalized state, with the report invariants enforced.

    ``g2`` is None when the state is (numerically) the vacuum.
    """
    _require_headroom(v)
    if phi_grid is None:
        phi_grid = default_phi_grid()
    dist = photon_distribution(v)
    m = ladder_moments(v)
    g = m.a2a2 / m.n ** 2 if m.n > TOL.vacuum_mean else None
    q = mandel_from_moments(m)
    s_phi = [(float(phi), squeezing_from_moments(m, float(phi))) for phi in phi_grid]

    tol = TOL.report_bound
    total = float(dist.sum())
    if abs(total - 1.0) > TOL.report_sum:
        raise InvariantViolation("photon_dist", f"sums to {total!r}")
    if q < -1.0 - tol:
        raise InvariantViolation("mandel_q", f"{q!r} < -1")
    for phi, value in s_phi:
        if value < -0.5 - tol:
            raise InvariantViolation("s_phi", f"S({phi:.6g}) = {value!r} < -1/2")
    if g is not None and abs(q - m.n * (g - 1.0)) > tol:
        raise InvariantViolation("mandel_q", "differs from <n>(g2 - 1)")
    return ObservableReport(dist, m.n, g, q, s_phi, success_prob)
