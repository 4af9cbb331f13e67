"""Pointer-state constructors: coherent, squeezed vacuum, Schrödinger cat."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from ._config import MAX_DIM, TOL, default_dim
from .errors import DegenerateCat, TruncationOverflow
from .fock import FockVector, displace, estimate_tail


class PointerKind(enum.Enum):
    COHERENT = "coherent"
    SQUEEZED_VACUUM = "squeezed"
    CAT = "cat"


POINTER_FIELDS = {
    PointerKind.COHERENT: {"r", "vartheta"},
    PointerKind.SQUEEZED_VACUUM: {"eta", "delta"},
    PointerKind.CAT: {"r", "delta", "omega"},
}


@dataclass(frozen=True)
class PointerSpec:
    """Initial pointer.  Only the parameters relevant to ``kind`` may be nonzero.

    coherent: alpha = r e^{i vartheta}; squeezed vacuum: xi = eta e^{i delta};
    cat: alpha = r e^{i delta} with superposition phase omega.
    """

    kind: PointerKind
    r: float = 0.0
    vartheta: float = 0.0
    eta: float = 0.0
    delta: float = 0.0
    omega: float = 0.0

    def __post_init__(self):
        kind = PointerKind(self.kind)
        object.__setattr__(self, "kind", kind)
        for name in ("r", "vartheta", "eta", "delta", "omega"):
            value = float(getattr(self, name))
            object.__setattr__(self, name, value)
            if name not in POINTER_FIELDS[kind] and value != 0.0:
                raise ValueError(f"{name} is not a parameter of a {kind.value} pointer")
        if self.r < 0 or self.eta < 0:
            raise ValueError("r and eta must be non-negative")
        if self.eta > TOL.max_eta:
            raise ValueError(f"eta={self.eta} exceeds {TOL.max_eta}")

    @classmethod
    def coherent(cls, r, vartheta=0.0):
        return cls(PointerKind.COHERENT, r=r, vartheta=vartheta)

    @classmethod
    def squeezed(cls, eta, delta=0.0):
        return cls(PointerKind.SQUEEZED_VACUUM, eta=eta, delta=delta)

    @classmethod
    def cat(cls, r, delta=0.0, omega=0.0):
        return cls(PointerKind.CAT, r=r, delta=delta, omega=omega)

    @property
    def alpha(self) -> complex:
        angle = self.vartheta if self.kind is PointerKind.COHERENT else self.delta
        return self.r * complex(math.cos(angle), math.sin(angle))

    def build(self, dim: int) -> FockVector:
        if self.kind is PointerKind.COHERENT:
            return coherent(self.r, self.vartheta, dim)
        if self.kind is PointerKind.SQUEEZED_VACUUM:
            return squeezed_vacuum(self.eta, self.delta, dim)
        return cat(self.r, self.delta, self.omega, dim)


def _coherent_amps(alpha: complex, dim: int) -> np.ndarray:
    # alpha^n / sqrt(n!) by running product; no factorial overflow
    steps = np.empty(dim, dtype=np.complex128)
    steps[0] = 1.0
    steps[1:] = alpha / np.sqrt(np.arange(1, dim))
    return np.exp(-0.5 * abs(alpha) ** 2) * np.cumprod(steps)


def _finish(amps: np.ndarray, what: str) -> FockVector:
    v = FockVector.from_amps(amps)
    if not v.well_truncated:
        raise TruncationOverflow(f"{what} not representable at dim {v.dim} "
                                 f"(tail_mass {v.tail_mass:.3g})")
    return v


def auto_dim(builder, dim):
    """Call ``builder(dim)``; when dim is None, double from the default up to MAX_DIM."""
    if dim is not None:
        return builder(dim)
    dim = default_dim()
    while True:
        try:
            return builder(dim)
        except TruncationOverflow:
            if dim >= MAX_DIM:
                raise
            dim = min(2 * dim, MAX_DIM)


def coherent(r: float, vartheta: float = 0.0, dim: int | None = None) -> FockVector:
    alpha = r * complex(math.cos(vartheta), math.sin(vartheta))
    return auto_dim(lambda d: _finish(_coherent_amps(alpha, d), f"coherent r={r}"), dim)


def squeezed_vacuum(eta: float, delta: float = 0.0, dim: int | None = None) -> FockVector:
    if eta > TOL.max_eta:
        raise ValueError(f"eta={eta} exceeds {TOL.max_eta}")

    def build(d):
        m = np.arange((d + 1) // 2)
        # ratio of consecutive even amplitudes: -e^{i delta} tanh(eta) sqrt((2m+1)(2m+2)) / (2(m+1))
        ratio = np.empty(m.shape[0], dtype=np.complex128)
        ratio[0] = 1.0 / math.sqrt(math.cosh(eta))
        k = m[:-1]
        ratio[1:] = (-np.exp(1j * delta) * math.tanh(eta)
                     * np.sqrt((2 * k + 1) * (2 * k + 2)) / (2 * (k + 1)))
        amps = np.zeros(d, dtype=np.complex128)
        amps[0::2] = np.cumprod(ratio)
        return _finish(amps, f"squeezed vacuum eta={eta}")

    return auto_dim(build, dim)


def cat_weight(r: float, omega: float) -> float:
    """K^-2 / 2 = 1 + e^{-2r^2} cos(omega), evaluated without cancellation."""
    x = math.exp(-2.0 * r * r)
    return -math.expm1(-2.0 * r * r) + x * 2.0 * math.cos(omega / 2) ** 2


def cat(r: float, delta: float = 0.0, omega: float = 0.0, dim: int | None = None) -> FockVector:
    """K(|alpha> + e^{i omega}|-alpha>), alpha = r e^{i delta}."""
    k_inv2 = 2.0 * cat_weight(r, omega)
    if k_inv2 < TOL.degenerate_cat:
        raise DegenerateCat(f"cat r={r}, omega={omega} vanishes (K^-2 = {k_inv2:.3g})")
    alpha = r * complex(math.cos(delta), math.sin(delta))
    phase = complex(math.cos(omega), math.sin(omega))

    def build(d):
        parity = np.where(np.arange(d) % 2 == 0, 1.0 + phase, 1.0 - phase)
        if math.cos(omega) == 1.0:
            parity[1::2] = 0.0
        elif math.cos(omega) == -1.0:
            parity[0::2] = 0.0
        return _finish(_coherent_amps(alpha, d) * parity / math.sqrt(k_inv2),
                       f"cat r={r}")

    return auto_dim(build, dim)


def hermite(n: int, z: complex) -> complex:
    """Physicists' Hermite polynomial H_n(z), complex argument, by recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    h_prev, h = 1.0 + 0j, 2.0 * z
    if n == 0:
        return h_prev
    for k in range(1, n):
        h_prev, h = h, 2.0 * z * h - 2.0 * k * h_prev
    return complex(h)


def squeezed_coherent_amplitudes(beta: complex, eta: float, delta: float, dim: int) -> np.ndarray:
    """<n|D(beta) S(xi)|0> for n = 0..dim-1."""
    return np.asarray(kernels.squeezed_coherent_series(complex(beta), float(eta), float(delta), int(dim)))


def squeezed_coherent_amplitude(n: int, beta: float | complex, eta: float, delta: float) -> complex:
    """Amplitude of n photons in the displaced squeezed vacuum D(beta)S(xi)|0>.

    ``beta`` is the displacement, +-s/2 for the two measurement branches.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return complex(squeezed_coherent_amplitudes(beta, eta, delta, n + 1)[n])


def squeezed_coherent(beta: complex, eta: float, delta: float = 0.0, dim: int | None = None) -> FockVector:
    return auto_dim(lambda d: _finish(squeezed_coherent_amplitudes(beta, eta, delta, d),
                                   f"squeezed coherent eta={eta}"), dim)


def build_pointer(spec: PointerSpec, dim: int | None = None, headroom: float = 0.0) -> FockVector:
    """Construct ``spec`` at a dimension that also survives displacements by +-headroom.

    With ``dim=None`` the truncation is doubled from the default until both the
    pointer and its displaced copies are well represented.
    """
    def build(d):
        v = spec.build(d)
        if headroom:
            displace(headroom, v)
            displace(-headroom, v)
        return v

    return auto_dim(build, dim)
