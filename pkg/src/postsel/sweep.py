"""Parameter sweeps over the postselected pointer, emitted as deterministic CSV.

Points are independent, so they are evaluated on a thread pool and merged
back in grid order (axis1-major).  A compute error at one point blanks the
affected cells and is reported in the ``warning`` column; the sweep goes on.
"""
from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import config as cfgmod
from .errors import ConfigParseError, PostselError
from .observables import (default_phi_grid, full_report, g2, mandel_q, mean_number,
                          photon_distribution, squeezing_parameter)
from .postselect import final_pointer
from .states import PointerKind

OUTPUT_NAMES = ("mean_n", "g2", "mandel_q", "success", "s_phi", "pn")
DEFAULT_PN_MAX = 20


def fmt(x: float) -> str:
    """12 significant digits; negative zero printed as 0."""
    return format(x + 0.0, ".12g")


@dataclass(frozen=True)
class Axis:
    name: str
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.name not in cfgmod.SWEEP_PARAMS:
            raise ConfigParseError(f"cannot sweep {self.name!r}", self.name)
        if self.count < 2:
            raise ConfigParseError(f"axis {self.name} needs count >= 2, got {self.count}", self.name)

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)

    @classmethod
    def parse(cls, text: str, field_name: str = "axis1") -> "Axis":
        """``name:start:stop:count``."""
        parts = [p.strip() for p in text.split(":")]
        if len(parts) != 4:
            raise ConfigParseError(f"{field_name} must be name:start:stop:count, got {text!r}", field_name)
        count = cfgmod.parse_number(parts[3], field_name)
        if count != int(count):
            raise ConfigParseError(f"{field_name}: count must be an integer", field_name)
        return cls(parts[0], cfgmod.parse_number(parts[1], field_name),
                   cfgmod.parse_number(parts[2], field_name), int(count))


@dataclass(frozen=True)
class Output:
    """One requested column: ``mean_n``, ``g2``, ``mandel_q``, ``success``,
    ``s_phi`` (at the ``phi_quad`` parameter), ``s_phi@angle`` or ``pn@n``."""

    label: str
    kind: str
    arg: Optional[float] = None

    @classmethod
    def parse(cls, text: str) -> "Output":
        label = text.strip()
        name, _, arg = label.partition("@")
        if name not in OUTPUT_NAMES:
            raise ConfigParseError(f"unknown output {label!r}", "outputs")
        if name == "pn":
            n = cfgmod.parse_number(arg, "outputs") if arg else None
            if n is None or n != int(n) or n < 0:
                raise ConfigParseError(f"pn needs a photon number, e.g. pn@3, got {label!r}", "outputs")
            return cls(label, name, int(n))
        if name == "s_phi":
            return cls(label, name, cfgmod.parse_number(arg, "outputs") if arg else None)
        if arg:
            raise ConfigParseError(f"output {name} takes no argument", "outputs")
        return cls(label, name)


@dataclass(frozen=True)
class SweepSpec:
    kind: PointerKind
    base: dict
    axis1: Axis
    axis2: Optional[Axis] = None
    outputs: tuple = ()
    dim: Optional[int] = None

    def __post_init__(self):
        if not self.outputs:
            raise ConfigParseError("no outputs requested", "outputs")
        if self.axis2 is not None and self.axis2.name == self.axis1.name:
            raise ConfigParseError("axis1 and axis2 sweep the same parameter", "axis2")
        # validate the corners so range errors surface as config errors up front
        for a in (self.axis1.start, self.axis1.stop):
            for b in ((self.axis2.start, self.axis2.stop) if self.axis2 else (None,)):
                try:
                    cfgmod.build_point(self.kind, self.point_values(a, b))
                except ConfigParseError:
                    raise
                except PostselError:
                    pass  # e.g. theta = pi at a corner: reported per point

    @property
    def axes(self) -> tuple:
        return (self.axis1,) if self.axis2 is None else (self.axis1, self.axis2)

    def point_values(self, v1, v2=None) -> dict:
        values = dict(self.base)
        values[self.axis1.name] = float(v1)
        if self.axis2 is not None:
            values[self.axis2.name] = float(v2)
        return values

    def grid(self) -> list:
        if self.axis2 is None:
            return [(v,) for v in self.axis1.values]
        return [(a, b) for a in self.axis1.values for b in self.axis2.values]

    @classmethod
    def from_pairs(cls, pairs) -> "SweepSpec":
        if "axis1" not in pairs:
            raise ConfigParseError("missing field 'axis1'", "axis1")
        outputs = tuple(Output.parse(o) for o in pairs.get("outputs", "").split(",") if o.strip())
        return cls(cfgmod.pointer_kind(pairs), cfgmod.parameters(pairs), Axis.parse(pairs["axis1"]),
                   Axis.parse(pairs["axis2"], "axis2") if "axis2" in pairs else None,
                   outputs, cfgmod.integer(pairs, "dim"))


@dataclass
class Table:
    header: list
    rows: list = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.rows)
        return buf.getvalue()


def _describe(exc: Exception) -> str:
    return f"{type(exc).__name__}: {exc}"


def _output_value(out: Output, state, success, values) -> float:
    if out.kind == "mean_n":
        return mean_number(state)
    if out.kind == "g2":
        return g2(state)
    if out.kind == "mandel_q":
        return mandel_q(state)
    if out.kind == "success":
        return success
    if out.kind == "s_phi":
        return squeezing_parameter(state, values.get("phi_quad", 0.0) if out.arg is None else out.arg)
    dist = photon_distribution(state)
    return float(dist[out.arg]) if out.arg < dist.size else 0.0


def evaluate(kind: PointerKind, values: dict, outputs, dim=None) -> tuple[list, list]:
    """Formatted cells for one point plus warning messages."""
    try:
        spec, mcfg = cfgmod.build_point(kind, values)
        state, success = final_pointer(spec, mcfg, dim)
    except PostselError as exc:
        return [""] * len(outputs), [_describe(exc)]
    cells, warnings = [], []
    for out in outputs:
        try:
            cells.append(fmt(_output_value(out, state, success, values)))
        except PostselError as exc:
            cells.append("")
            warnings.append(f"{out.label}: {_describe(exc)}")
    return cells, warnings


def thread_count(threads: Optional[int] = None) -> int:
    if threads is None:
        threads = int(os.environ.get("POSTSEL_THREADS", "0")) or min(8, os.cpu_count() or 1)
    return max(1, threads)


def run_sweep(spec: SweepSpec, threads: Optional[int] = None) -> Table:
    grid = spec.grid()

    def one(coords):
        return evaluate(spec.kind, spec.point_values(*coords), spec.outputs, spec.dim)

    with ThreadPoolExecutor(max_workers=thread_count(threads)) as pool:
        results = list(pool.map(one, grid))
    table = Table([a.name for a in spec.axes] + [o.label for o in spec.outputs] + ["warning"])
    for coords, (cells, warnings) in zip(grid, results):
        table.rows.append([fmt(c) for c in coords] + cells + ["; ".join(warnings)])
    return table


def point_table(kind: PointerKind, values: dict, dim=None, pn_max: int = DEFAULT_PN_MAX) -> Table:
    """Full observable report for one parameter point; compute errors propagate."""
    spec, mcfg = cfgmod.build_point(kind, values)
    state, success = final_pointer(spec, mcfg, dim)
    report = full_report(state, default_phi_grid(), success)
    header = ["mean_n", "g2", "mandel_q", "success", "success_naive"]
    row = [fmt(report.mean_n), "" if report.g2 is None else fmt(report.g2), fmt(report.mandel_q),
           fmt(success), fmt(mcfg.overlap ** 2)]
    for n in range(pn_max + 1):
        header.append(f"pn@{n}")
        row.append(fmt(float(report.photon_dist[n]) if n < report.photon_dist.size else 0.0))
    for phi, value in report.s_phi:
        header.append(f"s_phi@{fmt(phi)}")
        row.append(fmt(value))
    header.append("warning")
    row.append("" if report.g2 is not None else "g2: undefined for the vacuum")
    return Table(header, [row])
