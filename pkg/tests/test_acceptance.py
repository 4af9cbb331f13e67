"""Acceptance criteria 1-7.  Each test carries the ``acceptance`` marker; the
conftest prints one PASS/FAIL line per criterion at the end of the run."""
import hashlib
import math
import os
import subprocess
import sys
import time

import numpy as np
import pytest

from postsel.analytic import Status, default_grid, validate_all
from postsel.analytic import cat as cat_forms
from postsel.analytic import coherent as coh_forms
from postsel.analytic import squeezed as sq_forms
from postsel.analytic.validate import tolerance
from postsel.fock import FockVector, fidelity, inner
from postsel.observables import ladder_moments, mandel_from_moments, squeezing_from_moments
from postsel.postselect import MeasurementConfig, apply_postselected_measurement, final_pointer
from postsel.presets import PRESETS, run_figure
from postsel.states import PointerSpec, cat, squeezed_vacuum

PI = math.pi
SEED = 20240611


def criterion(number, title):
    return pytest.mark.acceptance(number, title)


def close(value, ref, rel=1e-8):
    return abs(value - ref) <= rel * max(1.0, abs(ref))


# -- 1 -----------------------------------------------------------------------

@criterion(1, "initial-state closed forms for g2, Q and S_phi")
def test_initial_state_closed_forms():
    start = time.perf_counter()
    bad = []
    for eta in (0.2, 0.5, 1.0):
        spec = PointerSpec.squeezed(eta, 0.0)
        m = ladder_moments(squeezed_vacuum(eta, 0.0))
        checks = {
            "g2": (m.a2a2 / m.n ** 2, 3 + 1 / math.sinh(eta) ** 2),
            "Q": (mandel_from_moments(m), 1 + 2 * math.sinh(eta) ** 2),
            "S(i)": (squeezing_from_moments(m, 0.0), sq_forms.init_sphi_squeezed_axis(eta)),
            "S(ii)": (squeezing_from_moments(m, PI / 2), sq_forms.init_sphi_stretched_axis(eta)),
        }
        for phi in (0.3, 1.1):
            checks[f"S@{phi}"] = (squeezing_from_moments(m, phi), sq_forms.init_sphi(spec, None, phi))
        bad += [(f"eta={eta}", k, v) for k, v in checks.items() if not close(*v)]
    for r in (0.3, 0.5, 1.0):
        for omega in (0.0, PI / 2, PI):
            for delta in (0.0, PI / 5):
                spec = PointerSpec.cat(r, delta, omega)
                m = ladder_moments(cat(r, delta, omega))
                checks = {
                    "Q": (mandel_from_moments(m), cat_forms.init_q(spec)),
                    "g2": (m.a2a2 / m.n ** 2, cat_forms.init_g2(spec)),
                }
                for phi in (0.0, PI / 4, PI / 2, 2.0):
                    checks[f"S@{phi:.3g}"] = (squeezing_from_moments(m, phi), cat_forms.init_sphi(spec, None, phi))
                bad += [(f"r={r} omega={omega:.3g} delta={delta:.3g}", k, v) for k, v in checks.items() if not close(*v)]
    elapsed = time.perf_counter() - start
    assert not bad, bad[:5]
    assert elapsed < 5, f"took {elapsed:.2f} s"


# -- 2 -----------------------------------------------------------------------

POINTERS = (PointerSpec.coherent(1.0, PI / 3), PointerSpec.squeezed(0.5, PI / 3), PointerSpec.cat(0.5, PI / 5, PI / 3))


@criterion(2, "s=0 leaves the pointer unchanged with success cos^2(theta/2)")
@pytest.mark.parametrize("spec", POINTERS, ids=lambda p: p.kind.value)
def test_zero_coupling_degeneracy(spec):
    rng = np.random.default_rng(SEED)
    pointer = spec.build(128)
    for theta, phi_sys in zip(rng.uniform(0, 0.98 * PI, 20), rng.uniform(-PI, PI, 20)):
        cfg = MeasurementConfig(0.0, theta, phi_sys)
        out, p = apply_postselected_measurement(cfg, pointer)
        assert fidelity(out, pointer) >= 1 - 1e-12
        assert abs(p - math.cos(theta / 2) ** 2) <= 1e-12


# -- 3 -----------------------------------------------------------------------

@criterion(3, "closed forms vs Fock oracle on the default grid: zero Fail")
def test_closed_forms_against_oracle():
    start = time.perf_counter()
    reports, summary = validate_all(default_grid("full"))
    elapsed = time.perf_counter() - start
    print(summary)
    assert summary.failures == 0, [(r.quantity.value, r.abs_err) for r in reports if r.status is Status.Fail][:5]
    for r in reports:
        if r.status is Status.PaperTypoSuspected:
            assert r.corrected_err < tolerance(r.oracle_value), r
    assert len({r.point for r in reports}) == 81
    assert elapsed < 60, f"took {elapsed:.2f} s"


# -- 4 -----------------------------------------------------------------------

@criterion(4, "two-coherent-state final pointer matches the Fock pipeline")
@pytest.mark.parametrize("r", (0.5, 1.0, 1.5))
def test_coherent_final_state(r):
    spec = PointerSpec.coherent(r, PI / 3)
    for s in (0.2, 1.0, 2.0):
        for theta in (PI / 9, PI / 3, 7 * PI / 9):
            cfg = MeasurementConfig(s, theta, 4 * PI / 5)
            numeric, _ = final_pointer(spec, cfg, 128)
            closed = FockVector.from_amps(coh_forms.final_state(spec, cfg, 128))
            assert abs(inner(closed, numeric)) ** 2 >= 1 - 1e-9, (s, theta)


# -- 5 -----------------------------------------------------------------------

def series(preset_id):
    """{curve: [(x, value), ...]} with empty cells dropped."""
    out = {}
    for curve, x, value, _ in run_figure(preset_id).rows:
        if value != "":
            out.setdefault(curve, []).append((float(x), float(value)))
    return out


def values(preset_id, keep=lambda curve, x: True):
    return [v for curve, pts in series(preset_id).items() for x, v in pts if keep(curve, x)]


@criterion(5, "figure-regime sign checks")
def test_figure_regimes():
    start = time.perf_counter()
    # (a) sub-Poissonian coherent pointer for weak coupling and a large weak value; bunching at s=2
    weak = values("fig2b", lambda c, x: c == "s=0.2")
    assert any(0 < g < 1 for g in weak)
    strong = values("fig2a", lambda c, x: c == "s=2") + values("fig2b", lambda c, x: c == "s=2")
    assert any(g > 1 for g in strong)
    # (b) X quadrature never squeezed, P quadrature squeezed somewhere
    assert min(values("fig3c")) >= -1e-9
    for pid in ("fig3a", "fig3b", "fig3d"):
        assert min(values(pid)) < -1e-3, pid
    # (c) squeezed pointer, theta=7pi/9, s >= 0.5, eta < 1: sub-Poissonian points
    strong_s = lambda c, x: float(c.split("=")[1]) >= 0.5 and x < 1
    assert any(0 < g < 1 for g in values("fig5b", strong_s))
    assert any(q < 0 for q in values("fig5d", strong_s))
    # (d) no squeezing of the P quadrature for the delta=0 squeezed pointer
    assert min(values("fig6d")) >= -1e-9
    # (e) odd cat shows no squeezing
    assert min(values("fig9c", lambda c, x: abs(x - PI) < 1e-12)) >= -1e-9
    assert min(values("fig9d")) >= -1e-9
    assert time.perf_counter() - start < 20


# -- 6 -----------------------------------------------------------------------

def random_case(rng):
    kind = rng.integers(3)
    if kind == 0:
        spec = PointerSpec.coherent(rng.uniform(0, 2), rng.uniform(0, 2 * PI))
    elif kind == 1:
        spec = PointerSpec.squeezed(rng.uniform(0, 1.2), rng.uniform(0, 2 * PI))
    else:
        spec = PointerSpec.cat(rng.uniform(0.1, 1.5), rng.uniform(0, 2 * PI), rng.uniform(0, 2 * PI))
    cfg = MeasurementConfig(rng.uniform(0, 3), rng.uniform(0, 0.9 * PI), rng.uniform(-PI, PI))
    return spec, cfg


@criterion(6, "universal properties over 1000 random states")
def test_universal_properties():
    rng = np.random.default_rng(SEED)
    phis = np.linspace(0, PI, 12, endpoint=False)
    for _ in range(1000):
        spec, cfg = random_case(rng)
        v, _ = final_pointer(spec, cfg)
        m = ladder_moments(v)
        where = (spec, cfg)
        assert abs(v.probabilities().sum() - 1) <= 1e-10, where
        q = mandel_from_moments(m)
        assert q >= -1 - 1e-9, where
        if m.n > 1e-12:
            assert abs(q - m.n * (m.a2a2 / m.n ** 2 - 1)) <= 1e-9, where
        for phi in phis:
            s0 = squeezing_from_moments(m, phi)
            s1 = squeezing_from_moments(m, phi + PI / 2)
            assert s0 >= -0.5 - 1e-9, where
            assert (s0 + 0.5) * (s1 + 0.5) >= 0.25 - 1e-9, where
            assert abs(squeezing_from_moments(m, phi + PI) - s0) <= 1e-10, where


# -- 7 -----------------------------------------------------------------------

def digest(preset_id, threads):
    return hashlib.sha256(run_figure(preset_id, threads).to_csv().encode()).hexdigest()


SUBPROCESS = """
import hashlib, sys
from postsel.presets import PRESETS, run_figure
for pid in PRESETS:
    print(pid, hashlib.sha256(run_figure(pid, 3).to_csv().encode()).hexdigest())
"""


@criterion(7, "figure CSV byte-identical across runs and thread counts")
def test_figure_determinism():
    first = {pid: digest(pid, 1) for pid in PRESETS}
    second = {pid: digest(pid, 8) for pid in PRESETS}
    env = dict(os.environ, PYTHONHASHSEED="12345")
    out = subprocess.run([sys.executable, "-c", SUBPROCESS], env=env, capture_output=True, text=True, check=True)
    third = dict(line.split() for line in out.stdout.splitlines())
    assert first == second == third
