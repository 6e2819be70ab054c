"""JSON reading and writing for fans, wheels, f-lists and reports.

Indices are zero-based in JSON (rays, cone members, variables in
components) and one-based in text output.  Monomials may be given as
exponent arrays or as product strings such as ``"x_1*x_6"``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .monomial import Monomial, MonomialIdeal
from .syzygy import FiltrationStep
from .syzygy_element import SyzygyElement
from .toric import DivisorClass, Fan
from .wheel import Wheel


class InputError(ValueError):
    """Malformed input file."""


def load_json(path: str | Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    return data


def _max_index(entries) -> int:
    top = 0
    for e in entries:
        if isinstance(e, str):
            for factor in e.split("*"):
                factor = factor.strip()
                if factor.startswith("x_"):
                    top = max(top, int(factor[2:].split("^")[0]))
        else:
            top = max(top, len(e))
    return top


def parse_monomial(entry: Any, d: int) -> Monomial:
    try:
        if isinstance(entry, str):
            return Monomial.parse(entry, d)
        mono = Monomial(int(x) for x in entry)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad monomial {entry!r}: {exc}") from exc
    if len(mono) != d:
        raise InputError(f"monomial {entry!r} has {len(mono)} exponents, expected {d}")
    return mono


def fan_from_json(data: dict) -> Fan:
    try:
        return Fan(int(data["dim"]), [tuple(r) for r in data["rays"]],
                   [tuple(c) for c in data["max_cones"]])
    except KeyError as exc:
        raise InputError(f"fan JSON is missing {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad fan: {exc}") from exc


def fan_to_json(fan: Fan) -> dict:
    return {"dim": fan.dim, "rays": [list(r) for r in fan.rays],
            "max_cones": [sorted(c) for c in sorted(fan.max_cones, key=sorted)]}


def _dimension(data: dict, keys, fan: Fan | None) -> int:
    if fan is not None:
        return fan.d
    if "d" in data:
        return int(data["d"])
    return _max_index(e for key in keys for e in (data.get(key) or []))


def wheel_from_json(data: dict, fan: Fan | None = None) -> Wheel:
    for key in ("f_out", "f_in", "rim_fwd"):
        if key not in data:
            raise InputError(f"wheel JSON is missing {key!r}")
    d = _dimension(data, ("f_out", "f_in", "rim_fwd", "rim_bwd"), fan)
    mono = lambda xs: [parse_monomial(x, d) for x in xs]
    rim_bwd = data.get("rim_bwd")
    try:
        wheel = Wheel.create(mono(data["f_out"]), mono(data["f_in"]), mono(data["rim_fwd"]),
                             mono(rim_bwd) if rim_bwd is not None else None,
                             data.get("base_class"))
    except ValueError as exc:
        raise InputError(f"bad wheel: {exc}") from exc
    if "m" in data and int(data["m"]) != wheel.m:
        raise InputError(f"wheel declares m={data['m']} but lists {wheel.m} spokes")
    return wheel


def wheel_to_json(wheel: Wheel) -> dict:
    arr = lambda xs: [list(x) for x in xs]
    return {"m": wheel.m, "f_out": arr(wheel.f_out), "f_in": arr(wheel.f_in),
            "rim_fwd": arr(wheel.rim_fwd), "rim_bwd": arr(wheel.rim_bwd),
            "base_class": list(wheel.base_divisor)}


def flist_from_json(data: dict) -> list[Monomial]:
    if "f" not in data:
        raise InputError("f-list JSON is missing 'f'")
    d = _dimension(data, ("f",), None)
    f = [parse_monomial(x, d) for x in data["f"]]
    if len(f) < 3:
        raise InputError(f"need at least three monomials, got {len(f)}")
    return f


def monomial_json(mono: Monomial) -> dict:
    return {"exponents": list(mono), "monomial": str(mono), "divisor": mono.divisor_str()}


def ideal_json(ideal: MonomialIdeal) -> list[dict]:
    return [monomial_json(g) for g in ideal.generators]


def class_json(c: DivisorClass | None) -> list[int] | None:
    return None if c is None else list(c.coords)


def element_json(v: SyzygyElement) -> dict:
    return {"basis": v.basis, "text": str(v),
            "terms": {str(i - 1): [[c, list(mono)] for mono, c in sorted(p.terms.items())]
                      for i, p in v.terms.items()}}


def step_json(step: FiltrationStep) -> dict:
    return {"k": step.k, "tau": list(step.tau), "vanishes": step.vanishes,
            "ideal_generators": ideal_json(step.ideal),
            "raw_generators": [monomial_json(g) for g in step.raw_generators],
            "shift_divisor": list(step.shift_divisor),
            "shift_divisor_str": signed_divisor_str(step.shift_divisor),
            "shift_class": class_json(step.shift_class),
            "shift_symbolic": step.shift_symbolic}


def signed_divisor_str(D) -> str:
    parts = []
    for i, c in enumerate(D, start=1):
        if c:
            coeff = "" if abs(c) == 1 else str(abs(c))
            parts.append(("-" if c < 0 else "+") + f"{coeff}E_{i}")
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text or "0"


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
