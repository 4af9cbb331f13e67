import math

import pytest

from postsel import config
from postsel.errors import ConfigParseError
from postsel.states import PointerKind


@pytest.mark.parametrize("text,value", [("0.5", 0.5), ("pi/3", math.pi / 3), ("7*pi/9", 7 * math.pi / 9),
                                        ("-2e-1", -0.2), ("(1+1)**2", 4.0)])
def test_parse_number(text, value):
    assert config.parse_number(text) == pytest.approx(value)


@pytest.mark.parametrize("text", ["__import__('os')", "pi()", "x", "1/0", "1e400", ""])
def test_parse_number_rejects(text):
    with pytest.raises(ConfigParseError):
        config.parse_number(text, "s")


def test_unknown_field_is_named():
    with pytest.raises(ConfigParseError) as info:
        config.parse_pairs(["pointer = coherent", "zeta = 1"])
    assert info.value.field == "zeta"
    assert "zeta" in str(info.value)


def test_comments_and_overrides(tmp_path):
    path = tmp_path / "c.cfg"
    path.write_text("# comment\npointer = coherent\n\nr = 1\ns = 2\n")
    pairs = config.load(str(path), ["s=0.5"])
    assert config.parameters(pairs) == {"s": 0.5, "r": 1.0}


def test_missing_file():
    with pytest.raises(ConfigParseError):
        config.load("/nonexistent/file.cfg")


def test_bad_pointer_kind():
    with pytest.raises(ConfigParseError) as info:
        config.pointer_kind({"pointer": "thermal"})
    assert info.value.field == "pointer"


def test_build_point_checks_fields():
    spec, cfg = config.build_point(PointerKind.CAT, {"r": 0.5, "omega": math.pi, "s": 1, "theta": 0.3})
    assert spec.omega == math.pi and cfg.s == 1
    with pytest.raises(ConfigParseError) as info:
        config.build_point(PointerKind.COHERENT, {"eta": 0.5})
    assert info.value.field == "eta"
    with pytest.raises(ConfigParseError):
        config.build_point(PointerKind.SQUEEZED_VACUUM, {"eta": -0.5})


def test_integer_fields():
    assert config.integer({"dim": "64"}, "dim") == 64
    with pytest.raises(ConfigParseError):
        config.integer({"dim": "6.5"}, "dim")
