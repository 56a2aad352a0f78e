"""Stable report serialization: text and byte-reproducible JSON.

Fractions are emitted as {"num": a, "den": m}, never floats.  JSON output
uses sorted keys and fixed separators, so identical inputs produce
byte-identical reports.
"""

from __future__ import annotations

import json
from fractions import Fraction


def jsonable(obj):
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (str, int, bool)) or obj is None:
        return obj
    if hasattr(obj, "as_dict"):
        return jsonable(obj.as_dict())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump_json(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, separators=(",", ":")) + "\n"


def complex_header(K) -> dict:
    return {
        "name": K.name,
        "dim": K.dim,
        "f_vector": list(K.f_vector),
        "euler_characteristic": K.euler_characteristic,
    }


def render_text(report: dict) -> str:
    """Human-readable rendering of the same payload."""
    lines = []

    def walk(prefix: str, value):
        if isinstance(value, dict):
            if set(value) == {"num", "den"}:
                lines.append(f"{prefix} = {value['num']}/{value['den']}")
                return
            for k in value:
                walk(f"{prefix}.{k}" if prefix else str(k), value[k])
        elif isinstance(value, list):
            if all(not isinstance(v, (dict, list)) for v in value):
                lines.append(f"{prefix} = {value}")
            else:
                for i, v in enumerate(value):
                    walk(f"{prefix}[{i}]", v)
        else:
            lines.append(f"{prefix} = {value}")

    walk("", jsonable(report))
    return "\n".join(lines) + "\n"
