"""Worked examples shipped with the package."""
from __future__ import annotations

import json
from importlib import resources


def path(name: str):
    return resources.files(__name__).joinpath(name)


def load(name: str) -> dict:
    return json.loads(path(name).read_text(encoding="utf-8"))


def hex_fan():
    from ..serialize import fan_from_json
    return fan_from_json(load("hex_fan.json"))


def hex_wheel():
    from ..serialize import wheel_from_json
    return wheel_from_json(load("hex_wheel.json"), hex_fan())


def seven_var_flist():
    from ..serialize import flist_from_json
    return flist_from_json(load("seven_var_flist.json"))
