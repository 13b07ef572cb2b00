"""JSON interchange for objects, maps, universes and towers.

Objects serialize as {"elements": [label, ...]} and maps as
{"dom": ..., "cod": ..., "table": {label: label}}.  Atom labels are JSON
strings; tuple labels are JSON arrays.  Table keys must be strings in
JSON, so tuple-labeled keys use the canonical text form "(a, b)"; both
forms are accepted on load.  Loading re-imposes canonical element order
and rejects duplicate or partial tables with a diagnostic naming the
offending label.
"""

from __future__ import annotations

import json

from .errors import DuplicateLabel, JsonFormatError
from .fin import FinMap, FinObj, label_str, normalize_label


def label_to_json(label):
    if isinstance(label, str):
        return label
    return [label_to_json(part) for part in label]


def label_from_json(data):
    try:
        return normalize_label(data)
    except TypeError as exc:
        raise JsonFormatError(str(exc)) from None


def label_from_str(text: str):
    """Parse the canonical text form of a label back into a label."""
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(text):
            raise JsonFormatError(f"truncated label key: {text!r}")
        if text[pos] == "(":
            pos += 1
            parts = []
            while True:
                if pos < len(text) and text[pos] == ")":
                    pos += 1
                    return tuple(parts)
                parts.append(parse())
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                    while pos < len(text) and text[pos] == " ":
                        pos += 1
                elif pos < len(text) and text[pos] == ")":
                    continue
                else:
                    raise JsonFormatError(f"malformed label key: {text!r}")
        start = pos
        while pos < len(text) and text[pos] not in "(),":
            pos += 1
        atom = text[start:pos].strip()
        if not atom:
            raise JsonFormatError(f"empty atom in label key: {text!r}")
        return atom

    result = parse()
    if pos != len(text):
        raise JsonFormatError(f"trailing characters in label key: {text!r}")
    return result


def obj_to_json(obj: FinObj) -> dict:
    return {"elements": [label_to_json(e) for e in obj.elements]}


def obj_from_json(data) -> FinObj:
    if not isinstance(data, dict) or "elements" not in data:
        raise JsonFormatError("object JSON must be {\"elements\": [...]}")
    try:
        return FinObj(label_from_json(e) for e in data["elements"])
    except DuplicateLabel as exc:
        raise JsonFormatError(f"duplicate element label: {label_str(exc.label)}") from None


def map_to_json(f: FinMap) -> dict:
    return {
        "dom": obj_to_json(f.dom),
        "cod": obj_to_json(f.cod),
        "table": {label_str(e): label_to_json(v) for e, v in f.table.items()},
    }


def map_from_json(data) -> FinMap:
    if not isinstance(data, dict) or not {"dom", "cod", "table"} <= set(data):
        raise JsonFormatError("map JSON must have dom, cod and table fields")
    dom = obj_from_json(data["dom"])
    cod = obj_from_json(data["cod"])
    raw = data["table"]
    if not isinstance(raw, dict):
        raise JsonFormatError("map table must be an object")
    table = {}
    for key, value in raw.items():
        label = label_from_str(key)
        if label in table:
            raise JsonFormatError(f"duplicate table entry for {key}")
        table[label] = label_from_json(value)
    for e in dom.elements:
        if e not in table:
            raise JsonFormatError(f"partial table: no image for {label_str(e)}")
    for e in table:
        if e not in dom:
            raise JsonFormatError(f"table key {label_str(e)} is not a domain element")
    for e, v in table.items():
        if v not in cod:
            raise JsonFormatError(f"table value {label_str(v)} is not a codomain element")
    return FinMap.from_table(dom, cod, table)


def universe_to_json(universe) -> dict:
    return {
        "ty": obj_to_json(universe.ty),
        "tm": obj_to_json(universe.tm),
        "tp": map_to_json(universe.tp),
    }


def universe_from_json(data):
    from .universe import Universe

    if not isinstance(data, dict) or not {"ty", "tm", "tp"} <= set(data):
        raise JsonFormatError("universe JSON must have ty, tm and tp fields")
    ty = obj_from_json(data["ty"])
    tm = obj_from_json(data["tm"])
    tp = map_from_json(data["tp"])
    if tp.dom != tm or tp.cod != ty:
        raise JsonFormatError("tp must map tm to ty")
    return Universe(tm=tm, ty=ty, tp=tp)


def tower_to_json(tower) -> dict:
    return {
        "levels": [universe_to_json(u) for u in tower.levels],
        "lifts": [
            {
                "l_ty": map_to_json(lift.morphism.l_ty),
                "l_tm": map_to_json(lift.morphism.l_tm),
                "u0": map_to_json(lift.u0),
                "as_tm": map_to_json(lift.as_tm),
            }
            for lift in tower.lifts
        ],
    }


def dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)
