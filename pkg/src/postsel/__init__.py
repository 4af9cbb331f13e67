"""Postselected von Neumann measurement on single-mode radiation fields."""
from .kernels import BACKEND
from .fock import FockVector, basis, displace, inner, normalize, fidelity
from .states import PointerKind, PointerSpec, coherent, squeezed_vacuum, cat
from .postselect import (MeasurementConfig, weak_value, apply_postselected_measurement,
                         apply_with_explicit_weak_value, final_pointer)
from .observables import full_report, g2, mandel_q, squeezing_parameter

__version__ = "0.1.0"
