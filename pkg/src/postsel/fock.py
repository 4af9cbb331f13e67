"""Truncated Fock-space state vectors and exact operator actions."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from ._config import TOL
from .errors import DimensionMismatch, TruncationOverflow, ZeroVector


def estimate_tail(amps: np.ndarray) -> float:
    """Probability weight expected beyond the cutoff.

    Sum of the last four basis probabilities plus a geometric continuation.
    The ratio is taken between consecutive *pairs* so that parity states
    (zero odd or zero even amplitudes) are handled.
    """
    p = np.abs(amps) ** 2
    dim = p.shape[0]
    if dim < 4:
        return float(p[-1])
    last = p[-4:]
    tail = float(last.sum())
    near, far = last[2] + last[3], last[0] + last[1]
    if near == 0.0:
        return tail
    if far == 0.0:
        return tail + near * dim
    q = near / far
    if q >= 1.0:
        return tail + near * dim
    return tail + near * q / (1.0 - q)


@dataclass(frozen=True, eq=False)
class FockVector:
    """Complex amplitudes over |0>..|dim-1> plus an estimate of truncated weight."""

    amps: np.ndarray
    tail_mass: float

    def __post_init__(self):
        amps = np.array(self.amps, dtype=np.complex128, copy=True).reshape(-1)
        if amps.shape[0] < 1:
            raise ValueError("FockVector needs dim >= 1")
        if not np.all(np.isfinite(amps)):
            raise ValueError("FockVector amplitudes must be finite")
        if not (self.tail_mass >= 0.0):
            raise ValueError("tail_mass must be non-negative")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)
        object.__setattr__(self, "tail_mass", float(self.tail_mass))

    @classmethod
    def from_amps(cls, amps, extra_tail: float = 0.0) -> "FockVector":
        amps = np.asarray(amps, dtype=np.complex128)
        return cls(amps, estimate_tail(amps) + max(extra_tail, 0.0))

    @property
    def dim(self) -> int:
        return self.amps.shape[0]

    @property
    def well_truncated(self) -> bool:
        return self.tail_mass < TOL.well_truncated

    def __len__(self):
        return self.dim

    def __getitem__(self, n):
        return self.amps[n]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def scaled(self, c: complex) -> "FockVector":
        return FockVector(self.amps * c, self.tail_mass * abs(c) ** 2)

    def __add__(self, other: "FockVector") -> "FockVector":
        _check_dims(self, other)
        return FockVector.from_amps(self.amps + other.amps,
                                    extra_tail=self.tail_mass + other.tail_mass)

    def __repr__(self):
        return f"FockVector(dim={self.dim}, norm={self.norm():.6g}, tail_mass={self.tail_mass:.3g})"


def _check_dims(u: FockVector, v: FockVector):
    if u.dim != v.dim:
        raise DimensionMismatch(f"dims differ: {u.dim} vs {v.dim}")


def basis(n: int, dim: int) -> FockVector:
    if not 0 <= n < dim:
        raise ValueError(f"basis index {n} outside 0..{dim - 1}")
    amps = np.zeros(dim, dtype=np.complex128)
    amps[n] = 1.0
    return FockVector.from_amps(amps)


def zeros(dim: int) -> FockVector:
    return FockVector(np.zeros(dim, dtype=np.complex128), 0.0)


def apply_annihilate(v: FockVector) -> FockVector:
    out = np.zeros(v.dim, dtype=np.complex128)
    out[:-1] = np.sqrt(np.arange(1, v.dim)) * v.amps[1:]
    return FockVector(out, estimate_tail(out))


def apply_create(v: FockVector) -> FockVector:
    if abs(v.amps[-1]) >= TOL.create_headroom:
        raise TruncationOverflow(
            f"a† needs headroom: |v[{v.dim - 1}]| = {abs(v.amps[-1]):.3g}")
    out = np.zeros(v.dim, dtype=np.complex128)
    out[1:] = np.sqrt(np.arange(1, v.dim)) * v.amps[:-1]
    return FockVector(out, estimate_tail(out))


def apply_number(v: FockVector) -> FockVector:
    return FockVector(np.arange(v.dim) * v.amps, v.tail_mass)


def displace(beta: complex, v: FockVector) -> FockVector:
    """D(beta) v on the truncated space.

    Each normal-ordered pass amplifies rounding by roughly exp(|beta| sqrt(dim)),
    so large displacements are split into equal sub-steps D(beta/k)^k, which
    compose exactly.  Weight pushed past the cutoff is accounted in tail_mass.
    """
    beta = complex(beta)
    if beta == 0:
        return v
    steps = max(1, math.ceil(abs(beta) * math.sqrt(v.dim) / TOL.displace_growth))
    step = beta / steps
    amps = v.amps
    lost = 0.0
    for _ in range(steps):
        before = float(np.vdot(amps, amps).real)
        amps = kernels.displace_step(step, np.ascontiguousarray(amps))
        lost += max(before - float(np.vdot(amps, amps).real), 0.0)
    tail = max(estimate_tail(amps), lost) + v.tail_mass
    if tail >= TOL.displace_tail:
        raise TruncationOverflow(
            f"D({beta:.4g}) leaves tail_mass {tail:.3g} at dim {v.dim}")
    return FockVector(amps, tail)


def inner(u: FockVector, v: FockVector) -> complex:
    _check_dims(u, v)
    return complex(np.vdot(u.amps, v.amps))


def normalize(v: FockVector) -> tuple[FockVector, float]:
    norm = v.norm()
    if not norm > TOL.zero_norm:
        raise ZeroVector("cannot normalize a zero vector")
    return v.scaled(1.0 / norm), norm


def fidelity(u: FockVector, v: FockVector) -> float:
    """|<u|v>|^2 / (<u|u><v|v>)."""
    _check_dims(u, v)
    return abs(inner(u, v)) ** 2 / (u.norm() ** 2 * v.norm() ** 2)


def expect_number(v: FockVector) -> float:
    return float(np.dot(np.arange(v.dim), v.probabilities()))
