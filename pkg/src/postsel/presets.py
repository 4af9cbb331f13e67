"""Figure presets: the fixed parameters, curve families and x axes of each panel.

Fixed values come from the figure captions.  Where a caption only says
"various weak values" or "various s", the curve family is one of the
representative sets below.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import UnknownPreset
from .states import PointerKind
from .sweep import Axis, DEFAULT_PN_MAX, Output, SweepSpec, Table, evaluate, fmt, run_sweep, thread_count

PI = math.pi
WEAK_THETAS = (PI / 9, PI / 3, 5 * PI / 9, 7 * PI / 9)
VARIOUS_S = (0.2, 0.5, 1.0, 2.0)
COHERENT_RS = (0.5, 1.0, 1.5)

S_AXIS = ("s", 0.0, 3.0, 31)
THETA_AXIS = ("theta", 0.0, 8 * PI / 9, 41)
PHI_AXIS = ("phi_quad", 0.0, PI, 37)
OMEGA_AXIS = ("omega", 0.0, 2 * PI, 37)
N_AXIS = ("n", 0, DEFAULT_PN_MAX, DEFAULT_PN_MAX + 1)


@dataclass(frozen=True)
class Preset:
    id: str
    pointer: PointerKind
    fixed: tuple          # ((name, value), ...) shared by every curve
    curves: tuple         # each curve is ((name, value), ...) of overrides
    x: tuple              # (name, start, stop, count); name "n" means P(n)
    output: str
    caption: str

    @property
    def fixed_dict(self) -> dict:
        return dict(self.fixed)


def _family(name, values, extra=()):
    return tuple(extra) + tuple(((name, v),) for v in values)


_NO_INTERACTION = (("s", 0.0),)


def _build():
    coh1 = (("r", 1.0), ("vartheta", PI / 3), ("phi_sys", PI / 4))
    coh2 = (("vartheta", PI / 3), ("phi_sys", 4 * PI / 5))
    sq4 = (("eta", 0.5), ("delta", PI / 3), ("phi_sys", PI / 3))
    sq5 = (("delta", PI / 3), ("phi_sys", PI / 3))
    cat7 = (("r", 0.5), ("delta", PI / 3), ("omega", 0.0), ("phi_sys", PI / 3))
    cat8 = (("delta", 0.0), ("phi_sys", 0.0))
    cat9 = (("r", 0.3), ("delta", 0.0), ("phi_sys", 0.0))
    C, S, K = PointerKind.COHERENT, PointerKind.SQUEEZED_VACUUM, PointerKind.CAT
    r_axis = ("r", 0.1, 2.0, 20)
    eta_axis = ("eta", 0.05, 1.5, 30)
    cat_r_axis = ("r", 0.05, 2.0, 40)
    items = [
        Preset("fig1a", C, coh1 + (("s", 2.0),), _family("theta", WEAK_THETAS, [(("s", 0.0), ("theta", 0.0))]),
               N_AXIS, "pn", "P(n), coherent, s=2, various weak values plus no interaction"),
        Preset("fig1b", C, coh1 + (("theta", 7 * PI / 9),), _family("s", VARIOUS_S), N_AXIS, "pn",
               "P(n), coherent, theta=7pi/9, various s"),
        Preset("fig2a", C, coh2 + (("theta", PI / 3),), _family("s", VARIOUS_S, [_NO_INTERACTION]), r_axis, "g2",
               "g2 vs r, theta=pi/3, various s plus initial state"),
        Preset("fig2b", C, coh2 + (("theta", 7 * PI / 9),), _family("s", VARIOUS_S, [_NO_INTERACTION]), r_axis, "g2",
               "g2 vs r, theta=7pi/9, various s plus initial state"),
        Preset("fig2c", C, coh2 + (("s", 0.2),), _family("r", COHERENT_RS), THETA_AXIS, "mandel_q",
               "Q vs weak value (via theta), s=0.2, various r"),
        Preset("fig2d", C, coh2 + (("s", 2.0),), _family("r", COHERENT_RS), THETA_AXIS, "mandel_q",
               "Q vs weak value (via theta), s=2, various r"),
        Preset("fig3a", C, coh2 + (("theta", PI / 9), ("phi_quad", PI / 2)), _family("r", COHERENT_RS), S_AXIS,
               "s_phi", "S vs s, P quadrature, theta=pi/9, various r"),
        Preset("fig3b", C, coh2 + (("theta", 7 * PI / 9), ("phi_quad", PI / 2)), _family("r", COHERENT_RS), S_AXIS,
               "s_phi", "S vs s, P quadrature, theta=7pi/9, various r"),
        Preset("fig3c", C, coh2 + (("theta", PI / 9), ("phi_quad", 0.0)), _family("r", COHERENT_RS), S_AXIS,
               "s_phi", "S vs s, X quadrature, theta=pi/9, various r"),
        Preset("fig3d", C, coh2 + (("s", 2.0), ("phi_quad", PI / 2)), _family("theta", WEAK_THETAS), r_axis,
               "s_phi", "S vs r, P quadrature, s=2, various weak values"),
        Preset("fig4a", S, sq4 + (("s", 1.0),), _family("theta", WEAK_THETAS, [(("s", 0.0), ("theta", 0.0))]),
               N_AXIS, "pn", "P(n), squeezed vacuum, s=1, various weak values plus no interaction"),
        Preset("fig4b", S, sq4 + (("theta", 7 * PI / 9),), _family("s", VARIOUS_S), N_AXIS, "pn",
               "P(n), squeezed vacuum, theta=7pi/9, various s"),
        Preset("fig5a", S, sq5 + (("eta", 0.2),), _family("theta", WEAK_THETAS), S_AXIS, "g2",
               "g2 vs s, eta=0.2, various weak values"),
        Preset("fig5b", S, sq5 + (("theta", 7 * PI / 9),), _family("s", VARIOUS_S), eta_axis, "g2",
               "g2 vs eta, theta=7pi/9, various s"),
        Preset("fig5c", S, sq5 + (("eta", 0.2),), _family("theta", WEAK_THETAS), S_AXIS, "mandel_q",
               "Q vs s, eta=0.2, various weak values"),
        Preset("fig5d", S, sq5 + (("theta", 7 * PI / 9),), _family("s", VARIOUS_S), eta_axis, "mandel_q",
               "Q vs eta, theta=7pi/9, various s"),
        Preset("fig6a", S, (("phi_sys", PI / 3), ("delta", 0.0), ("phi_quad", 0.0), ("theta", PI / 9)),
               _family("s", VARIOUS_S), ("eta", 0.0, 2.0, 41), "s_phi", "S vs eta, delta=phi=0, theta=pi/9, various s"),
        Preset("fig6b", S, (("phi_sys", PI / 3), ("eta", 0.5), ("delta", PI / 3), ("theta", PI / 9)),
               _family("s", VARIOUS_S), PHI_AXIS, "s_phi", "S vs phi, eta=0.5, delta=pi/3, theta=pi/9, various s"),
        Preset("fig6c", S, (("phi_sys", PI / 3), ("delta", 0.0), ("eta", 0.5), ("phi_quad", 0.0)),
               _family("theta", WEAK_THETAS), S_AXIS, "s_phi", "S vs s, phi=0, delta=0, eta=0.5, various weak values"),
        Preset("fig6d", S, (("phi_sys", PI / 3), ("delta", 0.0), ("eta", 0.5), ("phi_quad", PI / 2)),
               _family("theta", WEAK_THETAS), S_AXIS, "s_phi", "S vs s, phi=pi/2, delta=0, eta=0.5, various weak values"),
        Preset("fig7a", K, cat7 + (("s", 1.0),), _family("theta", WEAK_THETAS, [(("s", 0.0), ("theta", 0.0))]),
               N_AXIS, "pn", "P(n), even cat r=0.5, s=1, various weak values plus no interaction"),
        Preset("fig7b", K, cat7 + (("theta", 7 * PI / 9),), _family("s", VARIOUS_S), N_AXIS, "pn",
               "P(n), even cat r=0.5, theta=7pi/9, various s"),
        Preset("fig8a", K, cat8 + (("theta", PI / 9), ("r", 0.3)), _family("s", VARIOUS_S), OMEGA_AXIS, "g2",
               "g2 vs omega, theta=pi/9, r=0.3, various s"),
        Preset("fig8b", K, cat8 + (("s", 0.5), ("omega", PI)), _family("theta", WEAK_THETAS), cat_r_axis, "g2",
               "g2 vs r, odd cat, s=0.5, various weak values"),
        Preset("fig8c", K, cat8 + (("theta", PI / 9), ("r", 0.3)), _family("s", VARIOUS_S), OMEGA_AXIS, "mandel_q",
               "Q vs omega, theta=pi/9, r=0.3, various s"),
        Preset("fig8d", K, cat8 + (("s", 0.5), ("omega", PI)), _family("theta", WEAK_THETAS), cat_r_axis, "mandel_q",
               "Q vs r, odd cat, s=0.5, various weak values"),
        Preset("fig9a", K, cat9 + (("omega", 0.0), ("theta", PI / 9)), _family("s", VARIOUS_S), PHI_AXIS, "s_phi",
               "S vs phi, even cat, theta=pi/9, various s"),
        Preset("fig9b", K, cat9 + (("omega", 0.0), ("s", 0.5)), _family("theta", WEAK_THETAS), PHI_AXIS, "s_phi",
               "S vs phi, even cat, s=0.5, various weak values"),
        Preset("fig9c", K, cat9 + (("s", 0.5), ("phi_quad", PI / 2)), _family("theta", WEAK_THETAS), OMEGA_AXIS,
               "s_phi", "S vs omega, s=0.5, phi=pi/2, various weak values"),
        Preset("fig9d", K, cat9 + (("omega", PI), ("theta", PI / 9)), _family("s", VARIOUS_S), PHI_AXIS, "s_phi",
               "S vs phi, odd cat, theta=pi/9, various s"),
    ]
    return {p.id: p for p in items}


PRESETS = _build()


def get(preset_id: str) -> Preset:
    try:
        return PRESETS[preset_id]
    except KeyError:
        raise UnknownPreset(f"unknown preset {preset_id!r}; known: {', '.join(PRESETS)}", "preset") from None


def _label(curve) -> str:
    return " ".join(f"{k}={fmt(v)}" for k, v in curve)


def run_figure(preset_id: str, threads: Optional[int] = None, dim: Optional[int] = None) -> Table:
    """One CSV series per curve: rows are (curve, x, value, warning), curve-major."""
    p = get(preset_id)
    xname = p.x[0]
    table = Table(["curve", xname, p.output, "warning"])
    workers = thread_count(threads)
    for curve in p.curves:
        base = {**p.fixed_dict, **dict(curve)}
        label = _label(curve)
        if xname == "n":
            ns = range(p.x[1], p.x[2] + 1)
            cells, warnings = evaluate(p.pointer, base, [Output.parse(f"pn@{n}") for n in ns], dim)
            note = "; ".join(warnings)
            table.rows.extend([label, str(n), cell, note] for n, cell in zip(ns, cells))
            continue
        base.pop(xname, None)
        spec = SweepSpec(p.pointer, base, Axis(*p.x), None, (Output.parse(p.output),), dim)
        for row in run_sweep(spec, workers).rows:
            table.rows.append([label] + row)
    return table
