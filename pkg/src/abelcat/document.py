"""JSON documents describing a ring, named modules, named maps and claims.

::

    {"ring": "Z" | {"zmod": n},
     "objects":   {"A": {"gens": 2, "relations": [[2, 0], [0, 4]]}},
     "morphisms": {"f": {"dom": "A", "cod": "B", "matrix": [[1, 0]]}},
     "commute_mode": "asserted-pairs" | "all-paths",
     "assertions": [{"commute": [["f", "g"], ["h"]]},
                    {"exact": ["f", "g"], "left_zero": true, "right_zero": false}],
     "subcategory": ["A", "B"]}

Relations are columns.  Matrices are row-major with one row per codomain
generator.  Errors name the offending location as a JSON path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .diagram.commute import ALL_PATHS, ASSERTED_PAIRS, Arrow, Diagram, ExactClaim
from .diagram.generate import category_for
from .errors import ParseError, WellDefinednessError
from .fpmod import FpCategory, FpModule, Matrix, RingSpec


@dataclass
class InputDocument:
    ring: RingSpec
    objects: dict[str, FpModule] = field(default_factory=dict)
    morphisms: dict[str, Arrow] = field(default_factory=dict)
    commute_mode: str = ASSERTED_PAIRS
    commutes: list[tuple[list[str], list[str]]] = field(default_factory=list)
    exact: list[ExactClaim] = field(default_factory=list)
    subcategory: list[str] | None = None

    @property
    def cat(self) -> FpCategory:
        return category_for(self.ring)

    def diagram(self) -> Diagram:
        return Diagram(dict(self.objects), dict(self.morphisms), self.commute_mode,
                       list(self.commutes), list(self.exact))


def _int(v: Any, path: str, minimum: int | None = None) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError("expected an integer", path)
    if minimum is not None and v < minimum:
        raise ParseError(f"expected an integer >= {minimum}", path)
    return v


def _obj(v: Any, path: str) -> dict:
    if not isinstance(v, dict):
        raise ParseError("expected an object", path)
    return v


def _list(v: Any, path: str) -> list:
    if not isinstance(v, list):
        raise ParseError("expected a list", path)
    return v


def _name(v: Any, table: dict, path: str, what: str) -> str:
    if not isinstance(v, str):
        raise ParseError(f"expected a {what} name", path)
    if v not in table:
        raise ParseError(f"unknown {what} {v!r}", path)
    return v


def _ring(v: Any) -> RingSpec:
    if v == "Z":
        return RingSpec.integers()
    if isinstance(v, dict) and set(v) == {"zmod"}:
        return RingSpec.zmod(_int(v["zmod"], "$.ring.zmod", 2))
    raise ParseError('ring must be "Z" or {"zmod": n}', "$.ring")


def _int_rows(v: Any, length: int | None, path: str) -> list[list[int]]:
    out = []
    for i, row in enumerate(_list(v, path)):
        p = f"{path}[{i}]"
        row = [_int(x, f"{p}[{j}]") for j, x in enumerate(_list(row, p))]
        if length is not None and len(row) != length:
            raise ParseError(f"expected {length} entries, got {len(row)}", p)
        out.append(row)
    return out


def _path(v: Any, arrows: dict[str, Arrow], path: str) -> list[str]:
    """Arrow names in traversal order, checked to be composable."""
    names = _list(v, path)
    if not names:
        raise ParseError("empty path", path)
    out = [_name(a, arrows, f"{path}[{i}]", "morphism") for i, a in enumerate(names)]
    for i in range(1, len(out)):
        if arrows[out[i - 1]].tgt != arrows[out[i]].src:
            raise ParseError("arrow does not compose with its predecessor", f"{path}[{i}]")
    return out


def _ends(names: list[str], arrows: dict[str, Arrow]) -> tuple[str, str]:
    return arrows[names[0]].src, arrows[names[-1]].tgt


def parse_data(data: Any) -> InputDocument:
    root = _obj(data, "$")
    unknown = set(root) - {"ring", "objects", "morphisms", "commute_mode", "assertions",
                           "subcategory"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", "$")
    if "ring" not in root:
        raise ParseError("missing ring", "$")
    doc = InputDocument(_ring(root["ring"]))
    cat = doc.cat

    for name, entry in _obj(root.get("objects", {}), "$.objects").items():
        p = f"$.objects.{name}"
        entry = _obj(entry, p)
        gens = _int(entry.get("gens"), f"{p}.gens", 0)
        rels = _int_rows(entry.get("relations", []), gens, f"{p}.relations")
        doc.objects[name] = cat.module(gens, rels)

    for name, entry in _obj(root.get("morphisms", {}), "$.morphisms").items():
        p = f"$.morphisms.{name}"
        entry = _obj(entry, p)
        src = _name(entry.get("dom"), doc.objects, f"{p}.dom", "object")
        tgt = _name(entry.get("cod"), doc.objects, f"{p}.cod", "object")
        A, B = doc.objects[src], doc.objects[tgt]
        rows = _int_rows(entry.get("matrix"), A.gens, f"{p}.matrix")
        if len(rows) != B.gens:
            raise ParseError(f"expected {B.gens} rows, got {len(rows)}", f"{p}.matrix")
        try:
            mor = cat.make_morphism(A, B, Matrix(rows, A.gens))
        except WellDefinednessError as e:
            raise ParseError(str(e), f"{p}.matrix") from e
        doc.morphisms[name] = Arrow(src, tgt, mor)

    mode = root.get("commute_mode", ASSERTED_PAIRS)
    if mode not in (ASSERTED_PAIRS, ALL_PATHS):
        raise ParseError("commute_mode must be asserted-pairs or all-paths", "$.commute_mode")
    doc.commute_mode = mode

    for i, claim in enumerate(_list(root.get("assertions", []), "$.assertions")):
        p = f"$.assertions[{i}]"
        claim = _obj(claim, p)
        if "commute" in claim:
            pair = _list(claim["commute"], f"{p}.commute")
            if len(pair) != 2:
                raise ParseError("expected two paths", f"{p}.commute")
            left = _path(pair[0], doc.morphisms, f"{p}.commute[0]")
            right = _path(pair[1], doc.morphisms, f"{p}.commute[1]")
            if _ends(left, doc.morphisms) != _ends(right, doc.morphisms):
                raise ParseError("paths are not parallel", f"{p}.commute")
            doc.commutes.append((left, right))
        elif "exact" in claim:
            arrows = _path(claim["exact"], doc.morphisms, f"{p}.exact")
            flags = []
            for key in ("left_zero", "right_zero"):
                v = claim.get(key, False)
                if not isinstance(v, bool):
                    raise ParseError("expected a boolean", f"{p}.{key}")
                flags.append(v)
            doc.exact.append(ExactClaim(arrows, *flags))
        else:
            raise ParseError('assertion needs "commute" or "exact"', p)

    if "subcategory" in root:
        names = _list(root["subcategory"], "$.subcategory")
        doc.subcategory = [_name(a, doc.objects, f"$.subcategory[{i}]", "object")
                           for i, a in enumerate(names)]

    return doc


def parse_input(text: str) -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e.msg} (line {e.lineno}, column {e.colno})") from e
    return parse_data(data)


def serialize(doc: InputDocument) -> dict[str, Any]:
    ring: Any = "Z" if doc.ring.modulus is None else {"zmod": doc.ring.modulus}
    out: dict[str, Any] = {
        "ring": ring,
        "objects": {name: {"gens": A.gens, "relations": [list(c) for c in A.relations.columns()]}
                    for name, A in doc.objects.items()},
        "morphisms": {name: {"dom": a.src, "cod": a.tgt, "matrix": a.mor.payload.tolist()}
                      for name, a in doc.morphisms.items()},
        "commute_mode": doc.commute_mode,
        "assertions": [{"commute": [list(p), list(q)]} for p, q in doc.commutes]
        + [{"exact": list(c.arrows), "left_zero": c.left_zero, "right_zero": c.right_zero}
           for c in doc.exact],
    }
    if doc.subcategory is not None:
        out["subcategory"] = list(doc.subcategory)
    return out


def dumps(doc: InputDocument) -> str:
    return json.dumps(serialize(doc), sort_keys=True, indent=2)
