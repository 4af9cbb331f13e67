"""Numerical tolerances and truncation defaults shared by every module."""
import os
from dataclasses import dataclass

DEFAULT_DIM = 128
MAX_DIM = 1024


@dataclass(frozen=True)
class Tolerances:
    well_truncated: float = 1e-12   # tail_mass bound for a trusted state
    displace_tail: float = 1e-10    # tail_mass bound after a displacement
    create_headroom: float = 1e-14  # |v[dim-1]| allowed before applying a†
    zero_norm: float = 1e-300
    destructive: float = 1e-14      # ‖Φ̃‖² below this is treated as total cancellation
    vacuum_mean: float = 1e-12      # g2 undefined for <n> at or below this
    theta_margin: float = 1e-9      # theta must stay below pi - margin
    degenerate_cat: float = 1e-12   # reject cats with K^-2 below this
    max_eta: float = 4.0
    closed_form_rel: float = 1e-8   # analytic vs oracle agreement
    report_sum: float = 1e-10       # photon distribution must sum to 1
    report_bound: float = 1e-9      # Q >= -1, S >= -1/2, Q = <n>(g2 - 1)
    displace_growth: float = 8.0    # max |beta| sqrt(dim) per BCH sub-step


TOL = Tolerances()


def default_dim() -> int:
    """Starting truncation; ``POSTSEL_DIM`` overrides the built-in 128."""
    raw = os.environ.get("POSTSEL_DIM")
    if not raw:
        return DEFAULT_DIM
    dim = int(raw)
    if dim < 1:
        raise ValueError(f"POSTSEL_DIM must be positive, got {raw!r}")
    return dim
