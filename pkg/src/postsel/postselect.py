"""Weak values and the postselected von Neumann measurement on a pointer.

System: spin-1/2 preselected in cos(theta/2)|up> + e^{i phi_sys} sin(theta/2)|down>,
postselected on |up>, measured observable sigma_x.  The coupling
exp(-i g A P) splits into D(+s/2) and D(-s/2) branches.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ._config import TOL
from .errors import DivergentWeakValue, ZeroVector
from .fock import FockVector, displace, normalize
from .states import PointerSpec, auto_dim


@dataclass(frozen=True)
class MeasurementConfig:
    s: float
    theta: float
    phi_sys: float = 0.0

    def __post_init__(self):
        for name in ("s", "theta", "phi_sys"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if self.s < 0:
            raise ValueError("coupling s must be >= 0")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError("theta must lie in [0, pi]")
        if self.theta >= math.pi - TOL.theta_margin:
            raise DivergentWeakValue(
                "theta = pi makes pre- and postselected states orthogonal")

    @property
    def overlap(self) -> float:
        """<psi_f|psi_i> = cos(theta/2)."""
        return math.cos(self.theta / 2)


def weak_value(cfg: MeasurementConfig) -> complex:
    """<sigma_x>_w = e^{i phi_sys} tan(theta/2)."""
    if cfg.theta >= math.pi - TOL.theta_margin:
        raise DivergentWeakValue("weak value diverges at theta = pi")
    return cmath.exp(1j * cfg.phi_sys) * math.tan(cfg.theta / 2)


def postselection_success_naive(cfg: MeasurementConfig) -> float:
    """cos^2(theta/2): the projection weight ignoring branch interference (exact at s = 0)."""
    return math.cos(cfg.theta / 2) ** 2


def branch_coefficients(cfg: MeasurementConfig) -> tuple[complex, complex]:
    """(c+, c-) = 1/2 (cos(theta/2) +- e^{i phi_sys} sin(theta/2))."""
    c, sn = math.cos(cfg.theta / 2), math.sin(cfg.theta / 2)
    tilt = cmath.exp(1j * cfg.phi_sys) * sn
    return 0.5 * (c + tilt), 0.5 * (c - tilt)


def _superpose(c_plus: complex, c_minus: complex, s: float, pointer: FockVector) -> FockVector:
    if s == 0.0:
        return pointer.scaled(c_plus + c_minus)
    plus = displace(s / 2, pointer)
    minus = displace(-s / 2, pointer)
    return plus.scaled(c_plus) + minus.scaled(c_minus)


def measurement_transform(cfg: MeasurementConfig, pointer: FockVector) -> FockVector:
    """Un-normalized pointer after coupling and postselection, <psi_f|U|psi_i>|pointer>."""
    return _superpose(*branch_coefficients(cfg), cfg.s, pointer)


def _normalized(raw: FockVector) -> tuple[FockVector, float]:
    weight = raw.norm() ** 2
    if weight < TOL.destructive:
        raise ZeroVector(f"postselected branches cancel (weight {weight:.3g})")
    final, _ = normalize(raw)
    return final, weight


def apply_postselected_measurement(cfg: MeasurementConfig, pointer: FockVector) -> tuple[FockVector, float]:
    """Normalized final pointer and the exact postselection probability ‖Φ̃‖².

    At s = 0 the probability is cos^2(theta/2); for s > 0 it includes the
    interference between the two displaced branches.
    """
    return _normalized(measurement_transform(cfg, pointer))


def apply_with_explicit_weak_value(aw: complex, s: float, pointer: FockVector) -> tuple[FockVector, float]:
    """Same transform written with coefficients (1 +- aw)/2 and no <psi_f|psi_i> prefactor.

    Returns the normalized state and its weight relative to that prefactor.
    """
    aw = complex(aw)
    return _normalized(_superpose(0.5 * (1 + aw), 0.5 * (1 - aw), float(s), pointer))


def final_pointer(spec: PointerSpec, cfg: MeasurementConfig, dim: int | None = None) -> tuple[FockVector, float]:
    """Build ``spec`` and measure it, doubling the truncation until both succeed."""
    return auto_dim(lambda d: apply_postselected_measurement(cfg, spec.build(d)), dim)
