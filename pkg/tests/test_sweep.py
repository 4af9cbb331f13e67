import math

import pytest

from postsel import presets
from postsel.errors import ConfigParseError, UnknownPreset
from postsel.states import PointerKind
from postsel.sweep import Axis, Output, SweepSpec, fmt, run_sweep

PI = math.pi


def test_fmt():
    assert fmt(-0.0) == "0"
    assert fmt(1 / 3) == "0.333333333333"
    assert fmt(2.0) == "2"


def test_axis_count_must_be_two():
    with pytest.raises(ConfigParseError):
        Axis.parse("s:0:3:1")
    with pytest.raises(ConfigParseError):
        Axis("sigma", 0, 1, 3)


def test_output_parsing():
    assert Output.parse("pn@3").arg == 3
    assert Output.parse("s_phi@pi/2").arg == pytest.approx(PI / 2)
    for bad in ("pn", "pn@1.5", "g3", "g2@1"):
        with pytest.raises(ConfigParseError):
            Output.parse(bad)


def test_coherent_g2_sweep():
    spec = SweepSpec(PointerKind.COHERENT, {"r": 1.0, "vartheta": PI / 3, "theta": 7 * PI / 9, "phi_sys": PI / 4},
                     Axis("s", 0, 3, 31), outputs=(Output.parse("g2"),))
    rows = run_sweep(spec).rows
    assert len(rows) == 31
    assert all(row[-1] == "" for row in rows)
    assert float(rows[0][1]) == pytest.approx(1, abs=1e-9)


def test_squeezed_sub_poissonian_region():
    spec = SweepSpec(PointerKind.SQUEEZED_VACUUM, {"eta": 0.2, "delta": PI / 3, "phi_sys": PI / 3},
                     Axis("s", 0, 3, 21), Axis("theta", 0, 8 * PI / 9, 21), (Output.parse("mandel_q"),))
    rows = run_sweep(spec).rows
    assert len(rows) == 441
    negative = [(float(s), float(t)) for s, t, q, _ in rows if float(q) < 0]
    assert negative
    assert all(s >= 0.3 for s, _ in negative)
    assert max(t for _, t in negative) > 2


def test_rows_are_axis1_major():
    spec = SweepSpec(PointerKind.COHERENT, {"r": 1.0}, Axis("s", 0, 1, 2), Axis("theta", 0, 1, 3),
                     (Output.parse("success"),))
    assert [(r[0], r[1]) for r in run_sweep(spec).rows] == [
        ("0", "0"), ("0", "0.5"), ("0", "1"), ("1", "0"), ("1", "0.5"), ("1", "1")]


def test_per_point_failures_do_not_abort():
    spec = SweepSpec(PointerKind.COHERENT, {"r": 0.0, "s": 0.0}, Axis("theta", 0, 1, 2),
                     outputs=(Output.parse("g2"), Output.parse("mean_n")))
    rows = run_sweep(spec).rows
    assert rows[0][1] == "" and rows[0][2] == "0"
    assert "VacuumUndefined" in rows[0][3]


def test_divergent_corner_reported_per_point():
    spec = SweepSpec(PointerKind.COHERENT, {"r": 1.0, "s": 1.0}, Axis("theta", 0, PI, 3),
                     outputs=(Output.parse("g2"),))
    rows = run_sweep(spec).rows
    assert rows[-1][1] == "" and "DivergentWeakValue" in rows[-1][2]
    assert rows[0][1] != ""


def test_sweep_deterministic_across_threads():
    spec = SweepSpec(PointerKind.CAT, {"r": 0.5, "omega": PI, "theta": 7 * PI / 9},
                     Axis("s", 0, 2, 9), outputs=(Output.parse("g2"), Output.parse("s_phi@pi/2")))
    assert run_sweep(spec, 1).to_csv() == run_sweep(spec, 6).to_csv()


FROZEN_CAPTIONS = {
    "fig1a": {"r": 1.0, "vartheta": PI / 3, "phi_sys": PI / 4, "s": 2.0},
    "fig1b": {"r": 1.0, "vartheta": PI / 3, "phi_sys": PI / 4, "theta": 7 * PI / 9},
    "fig2a": {"vartheta": PI / 3, "phi_sys": 4 * PI / 5, "theta": PI / 3},
    "fig3c": {"vartheta": PI / 3, "phi_sys": 4 * PI / 5, "theta": PI / 9, "phi_quad": 0.0},
    "fig4a": {"eta": 0.5, "delta": PI / 3, "phi_sys": PI / 3, "s": 1.0},
    "fig5a": {"eta": 0.2, "delta": PI / 3, "phi_sys": PI / 3},
    "fig6d": {"eta": 0.5, "delta": 0.0, "phi_sys": PI / 3, "phi_quad": PI / 2},
    "fig7a": {"r": 0.5, "delta": PI / 3, "omega": 0.0, "phi_sys": PI / 3, "s": 1.0},
    "fig8b": {"delta": 0.0, "phi_sys": 0.0, "s": 0.5, "omega": PI},
    "fig9d": {"r": 0.3, "delta": 0.0, "phi_sys": 0.0, "omega": PI, "theta": PI / 9},
}


@pytest.mark.parametrize("preset_id", sorted(FROZEN_CAPTIONS))
def test_preset_caption_constants(preset_id):
    assert presets.get(preset_id).fixed_dict == FROZEN_CAPTIONS[preset_id]


def test_all_panels_present():
    expected = {f"fig{n}{p}" for n in range(1, 10) for p in "abcd"} - {"fig1c", "fig1d", "fig4c", "fig4d",
                                                                        "fig7c", "fig7d"}
    assert set(presets.PRESETS) == expected


def test_unknown_preset():
    with pytest.raises(UnknownPreset):
        presets.get("fig10a")


def test_fig1a_layout():
    table = presets.run_figure("fig1a")
    assert table.header == ["curve", "n", "pn", "warning"]
    assert len(table.rows) == 5 * 21
    assert table.rows[0][0] == "s=0 theta=0"
