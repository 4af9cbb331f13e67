"""Flat ``key = value`` configuration files.

Numbers may be written as arithmetic on ``pi``, e.g. ``theta = 7*pi/9``.
Lines starting with ``#`` are comments.
"""
from __future__ import annotations

import ast
import math
import operator

from .errors import ConfigParseError
from .postselect import MeasurementConfig
from .states import POINTER_FIELDS, PointerKind, PointerSpec

POINTER_PARAMS = ("r", "vartheta", "eta", "delta", "omega")
MEASUREMENT_PARAMS = ("s", "theta", "phi_sys")
SWEEP_PARAMS = MEASUREMENT_PARAMS + POINTER_PARAMS + ("phi_quad",)
OTHER_KEYS = ("pointer", "axis1", "axis2", "outputs", "dim", "pn_max")
KNOWN_KEYS = SWEEP_PARAMS + OTHER_KEYS

_BINARY = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}
_UNARY = {ast.UAdd: operator.pos, ast.USub: operator.neg}
_NAMES = {"pi": math.pi}


def _eval(node):
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        return float(node.value)
    if isinstance(node, ast.Name) and node.id in _NAMES:
        return _NAMES[node.id]
    if isinstance(node, ast.BinOp) and type(node.op) in _BINARY:
        return _BINARY[type(node.op)](_eval(node.left), _eval(node.right))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
        return _UNARY[type(node.op)](_eval(node.operand))
    raise ValueError("unsupported expression")


def parse_number(text: str, field: str | None = None) -> float:
    """Evaluate a numeric literal or arithmetic expression in ``pi``."""
    try:
        value = _eval(ast.parse(text.strip(), mode="eval"))
    except (SyntaxError, ValueError, ZeroDivisionError, OverflowError) as exc:
        raise ConfigParseError(f"{field or 'value'}: cannot parse {text!r}", field) from exc
    if not math.isfinite(value):
        raise ConfigParseError(f"{field or 'value'}: {text!r} is not finite", field)
    return value


def parse_pairs(lines, source: str = "config") -> dict[str, str]:
    """Split ``key = value`` lines into a dict; unknown keys are rejected."""
    out = {}
    for number, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigParseError(f"{source}:{number}: expected key = value, got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in KNOWN_KEYS:
            raise ConfigParseError(f"{source}:{number}: unknown field {key!r}", key)
        out[key] = value
    return out


def load(path: str, overrides=()) -> dict[str, str]:
    try:
        with open(path, encoding="utf-8") as fh:
            pairs = parse_pairs(fh, path)
    except OSError as exc:
        raise ConfigParseError(f"cannot read {path}: {exc.strerror}") from exc
    pairs.update(parse_pairs(overrides, "--set"))
    return pairs


def pointer_kind(pairs) -> PointerKind:
    name = pairs.get("pointer")
    if name is None:
        raise ConfigParseError("missing field 'pointer'", "pointer")
    try:
        return PointerKind(name)
    except ValueError:
        choices = ", ".join(k.value for k in PointerKind)
        raise ConfigParseError(f"pointer must be one of {choices}, got {name!r}", "pointer") from None


def numeric(pairs, key: str, default: float = 0.0) -> float:
    return parse_number(pairs[key], key) if key in pairs else default


def build_point(kind: PointerKind, values: dict[str, float]) -> tuple[PointerSpec, MeasurementConfig]:
    """PointerSpec and MeasurementConfig from a flat parameter mapping."""
    fields = {k: values.get(k, 0.0) for k in POINTER_PARAMS}
    for key, value in fields.items():
        if key not in POINTER_FIELDS[kind] and value != 0.0:
            raise ConfigParseError(f"{key} is not a parameter of a {kind.value} pointer", key)
    for key in ("r", "eta"):
        if fields[key] < 0:
            raise ConfigParseError(f"{key} must be non-negative", key)
    try:
        spec = PointerSpec(kind, **fields)
    except ValueError as exc:
        raise ConfigParseError(str(exc), "eta") from None
    try:
        cfg = MeasurementConfig(values.get("s", 0.0), values.get("theta", 0.0), values.get("phi_sys", 0.0))
    except ValueError as exc:
        raise ConfigParseError(str(exc)) from None
    return spec, cfg


def parameters(pairs) -> dict[str, float]:
    return {k: parse_number(pairs[k], k) for k in SWEEP_PARAMS if k in pairs}


def integer(pairs, key: str, default: int | None = None) -> int | None:
    if key not in pairs:
        return default
    value = parse_number(pairs[key], key)
    if value != int(value) or value < 1:
        raise ConfigParseError(f"{key} must be a positive integer", key)
    return int(value)
