"""Compare every closed form against the numeric Fock pipeline.

The closed-form modules never touch the oracle; this is the only place the
two paths meet.  A quantity is ``Match`` when its printed form agrees,
``PaperTypoSuspected`` when only the corrected form does, ``Fail`` otherwise.
"""
from __future__ import annotations

import cmath
import collections
import csv
import io
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .._config import TOL
from ..fock import displace
from ..observables import ladder_moments, mandel_from_moments, squeezing_from_moments
from ..postselect import MeasurementConfig, final_pointer
from ..states import PointerKind, PointerSpec, squeezed_vacuum
from . import cat, coherent, squeezed
from .quantities import Quantity, Status
from .typos import typo_csv

# kind -> (literal forms, corrected forms); tests swap entries in to inject failures
REGISTRY = {
    PointerKind.COHERENT: (coherent.LITERAL, coherent.CORRECTED),
    PointerKind.SQUEEZED_VACUUM: (squeezed.LITERAL, squeezed.CORRECTED),
    PointerKind.CAT: (cat.LITERAL, cat.CORRECTED),
}

AMPLITUDE_ORDERS = (2, 5)


@dataclass(frozen=True)
class GridPoint:
    spec: PointerSpec
    cfg: MeasurementConfig
    phi: float


@dataclass(frozen=True)
class ClosedFormReport:
    quantity: Quantity
    point: GridPoint
    detail: str
    analytic_value: complex
    oracle_value: complex
    abs_err: float
    status: Status
    corrected_value: complex
    corrected_err: float


@dataclass(frozen=True)
class Summary:
    counts: dict = field(default_factory=dict)

    @property
    def failures(self) -> int:
        return self.counts.get(Status.Fail, 0)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def __str__(self):
        return ", ".join(f"{s.value}={self.counts.get(s, 0)}" for s in Status)


def tolerance(oracle_value) -> float:
    return TOL.closed_form_rel * max(1.0, abs(oracle_value))


def classify(literal, corrected, oracle):
    """Status, literal error and corrected error for one comparison."""
    err = abs(complex(literal) - complex(oracle))
    cerr = abs(complex(corrected) - complex(oracle))
    tol = tolerance(oracle)
    if err < tol:
        return Status.Match, err, cerr
    if cerr < tol:
        return Status.PaperTypoSuspected, err, cerr
    return Status.Fail, err, cerr


def _oracle(point: GridPoint) -> dict:
    spec, cfg, phi = point.spec, point.cfg, point.phi
    final, success = final_pointer(spec, cfg)
    m = ladder_moments(final)
    weight = success / cfg.overlap ** 2
    init = ladder_moments(spec.build(final.dim))
    rot = cmath.exp(-1j * phi)
    x = math.sqrt(2) * (m.a * rot).real
    x2 = 0.5 * (2 * (m.a2 * rot * rot).real + 2 * m.n + 1)
    init_g2 = init.a2a2 / init.n ** 2 if init.n > TOL.vacuum_mean else math.nan
    return {
        Quantity.CohNorm: 2 * weight,
        Quantity.CohMeanN: m.n,
        Quantity.CohA2A2: m.a2a2,
        Quantity.CohXphi: x,
        Quantity.CohA2: m.a2,
        Quantity.SqNorm: 1 / math.sqrt(weight),
        Quantity.SqMeanN: m.n,
        Quantity.SqA2A2: m.a2a2,
        Quantity.SqXphi: x,
        Quantity.SqX2: x2,
        Quantity.SqInitG2: init_g2,
        Quantity.SqInitQ: mandel_from_moments(init),
        Quantity.SqInitSphi: squeezing_from_moments(init, phi),
        Quantity.CatNorm: weight,
        Quantity.CatMeanN: m.n,
        Quantity.CatA2A2: m.a2a2,
        Quantity.CatAmean: m.a,
        Quantity.CatA2: m.a2,
        Quantity.CatInitQ: mandel_from_moments(init),
        Quantity.CatInitG2: init_g2,
        Quantity.CatInitSphi: squeezing_from_moments(init, phi),
    }


def _report(quantity, point, detail, literal, corrected, oracle):
    status, err, cerr = classify(literal, corrected, oracle)
    return ClosedFormReport(quantity, point, detail, complex(literal), complex(oracle),
                            err, status, complex(corrected), cerr)


def _amplitude_reports(point: GridPoint):
    spec, s = point.spec, point.cfg.s
    shifted = displace(s / 2, squeezed_vacuum(spec.eta, spec.delta))
    out = []
    for n in AMPLITUDE_ORDERS:
        value = squeezed.amplitude_literal(n, complex(s / 2), spec.eta, spec.delta)
        out.append(_report(Quantity.SqAmp, point, f"n={n}", value, value, shifted.amps[n]))
    return out


def evaluate_point(point: GridPoint) -> list[ClosedFormReport]:
    literal, corrected = REGISTRY[point.spec.kind]
    oracle = _oracle(point)
    reports = []
    for quantity, fn in corrected.items():
        oracle_value = oracle[quantity]
        if isinstance(oracle_value, float) and math.isnan(oracle_value):
            continue  # g2 undefined for the vacuum
        fixed = fn(point.spec, point.cfg, point.phi)
        printed = literal[quantity](point.spec, point.cfg, point.phi) if quantity in literal else fixed
        reports.append(_report(quantity, point, "", printed, fixed, oracle_value))
    if point.spec.kind is PointerKind.SQUEEZED_VACUUM:
        reports.extend(_amplitude_reports(point))
    return reports


# -- grids -------------------------------------------------------------------

S_VALUES = (0.2, 1.0, 2.0)
THETA_VALUES = (math.pi / 9, math.pi / 3, 7 * math.pi / 9)
PHI_QUAD = math.pi / 5

POINTERS = {
    PointerKind.COHERENT: ([PointerSpec.coherent(r, math.pi / 3) for r in (0.5, 1.0, 1.5)], 4 * math.pi / 5),
    PointerKind.SQUEEZED_VACUUM: ([PointerSpec.squeezed(eta, math.pi / 3) for eta in (0.2, 0.5, 1.0)], math.pi / 3),
    PointerKind.CAT: ([PointerSpec.cat(r, math.pi / 5, math.pi / 3) for r in (0.3, 0.5, 1.0)], math.pi / 4),
}


def default_grid(size: str = "full") -> list[GridPoint]:
    """3x3x3 per pointer (pointer parameter, s, theta); ``small`` keeps 1x2x2."""
    if size not in ("small", "full"):
        raise ValueError(f"unknown grid size {size!r}")
    pick = (lambda seq: seq) if size == "full" else (lambda seq: (seq[0], seq[-1]))
    points = []
    for kind, (specs, phi_sys) in POINTERS.items():
        chosen = specs if size == "full" else specs[1:2]
        for spec in chosen:
            for s in pick(S_VALUES):
                for theta in pick(THETA_VALUES):
                    points.append(GridPoint(spec, MeasurementConfig(s, theta, phi_sys), PHI_QUAD))
    return points


def validate_all(grid=None, workers: int | None = None):
    """Evaluate every closed form on every grid point; reports keep grid order."""
    grid = default_grid() if grid is None else list(grid)
    if not grid:
        raise ValueError("validation grid is empty")
    workers = workers or min(8, os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        chunks = list(pool.map(evaluate_point, grid))
    reports = [r for chunk in chunks for r in chunk]
    return reports, Summary(dict(collections.Counter(r.status for r in reports)))


# -- export ------------------------------------------------------------------

REPORT_FIELDS = ("quantity", "pointer", "r", "vartheta", "eta", "delta", "omega", "s", "theta",
                 "phi_sys", "phi_quad", "detail", "analytic_re", "analytic_im", "oracle_re",
                 "oracle_im", "abs_err", "status", "corrected_re", "corrected_im", "corrected_err")


def _g(x: float) -> str:
    return format(x, ".12g")


def reports_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_FIELDS)
    for r in reports:
        sp, cfg = r.point.spec, r.point.cfg
        w.writerow([r.quantity.value, sp.kind.value] + [_g(v) for v in (
            sp.r, sp.vartheta, sp.eta, sp.delta, sp.omega, cfg.s, cfg.theta, cfg.phi_sys, r.point.phi)]
            + [r.detail] + [_g(v) for v in (r.analytic_value.real, r.analytic_value.imag,
                                            r.oracle_value.real, r.oracle_value.imag)]
            + [format(r.abs_err, ".3e"), r.status.value, _g(r.corrected_value.real),
               _g(r.corrected_value.imag), format(r.corrected_err, ".3e")])
    return buf.getvalue()


def write_outputs(reports, out_dir) -> tuple[str, str]:
    os.makedirs(out_dir, exist_ok=True)
    paths = (os.path.join(out_dir, "validation.csv"), os.path.join(out_dir, "typos.csv"))
    for path, text in zip(paths, (reports_csv(reports), typo_csv(reports))):
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return paths
