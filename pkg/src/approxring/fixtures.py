"""Fixture documents: schema, loader, serializer and the bundled fixtures.

A fixture is a JSON document::

    {
      "version": "1",
      "elements":   [{"label": "x00", "coords": [0, 0], "features": [205, 32, 41]}, ...],
      "operations": [{"name": "add", "rule": "mod2-add"},
                     {"name": "t", "rule": "table", "table": [["a", "b"], ["b", "a"]]}],
      "subsets":    {"R1": ["x01", "x10"]},
      "contexts":   {"R1": {"subset": "R1", "add": "add", "mul": "mul"}}
    }

Elements of derived spaces may carry ``"feature_set"`` (a list of vectors)
instead of ``"features"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import jsonschema

from .errors import ApproxError, ClosureError, FixtureError, NotAGridError, TableError
from .optables import OpTable, from_rows, grid_add_mod2, grid_mul_min
from .proximity import DescriptiveSpace, Subset
from .reports import CheckReport
from .structures import RingContext, is_approx_ring

FORMAT_VERSION = "1"

_vector = {"type": "array", "items": {"type": "integer"}, "minItems": 1}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["version", "elements", "operations", "subsets", "contexts"],
    "additionalProperties": False,
    "properties": {
        "version": {"type": "string"},
        "comment": {"type": "string"},
        "elements": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["label"],
                "additionalProperties": False,
                "properties": {
                    "label": {"type": "string", "minLength": 1},
                    "coords": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                    "features": _vector,
                    "feature_set": {"type": "array", "items": _vector, "minItems": 1},
                },
                "oneOf": [{"required": ["features"]}, {"required": ["feature_set"]}],
            },
        },
        "operations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "rule"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string", "minLength": 1},
                    "rule": {"enum": ["mod2-add", "min-mul", "table"]},
                    "table": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
                },
            },
        },
        "subsets": {
            "type": "object",
            "additionalProperties": {"type": "array", "items": {"type": "string"}},
        },
        "contexts": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["subset", "add", "mul"],
                "additionalProperties": False,
                "properties": {
                    "subset": {"type": "string"},
                    "add": {"type": "string"},
                    "mul": {"type": "string"},
                },
            },
        },
    },
}


@dataclass
class Fixture:
    space: DescriptiveSpace
    ops: dict[str, OpTable]
    subsets: dict[str, Subset]
    contexts: dict[str, RingContext]
    comment: str = ""
    version: str = FORMAT_VERSION
    # AR1-AR3 pre-check per context; an error message when the check raised
    ring_reports: dict[str, CheckReport | str] = field(default_factory=dict, compare=False, repr=False)

    def to_document(self) -> dict:
        return save_fixture(self)

    def subset(self, name: str) -> Subset:
        try:
            return self.subsets[name]
        except KeyError:
            raise FixtureError(f"unknown subset {name!r}; known: {sorted(self.subsets)}") from None

    def context(self, name: str) -> RingContext:
        try:
            return self.contexts[name]
        except KeyError:
            raise FixtureError(f"unknown context {name!r}; known: {sorted(self.contexts)}") from None


def _parse_text(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def read_document(source) -> dict:
    """Resolve ``builtin:NAME``, a path, JSON text or an already-parsed dict."""
    if isinstance(source, dict):
        return source
    if isinstance(source, str) and source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        if name not in BUILTINS:
            raise FixtureError(f"unknown builtin fixture {name!r}; known: {sorted(BUILTINS)}")
        return BUILTINS[name]()
    if isinstance(source, str) and source.lstrip().startswith("{"):
        return _parse_text(source)
    path = Path(source)
    if not path.is_file():
        raise FixtureError(f"fixture not found: {source}")
    return _parse_text(path.read_text(encoding="utf-8"))


def validate_document(doc: dict) -> None:
    validator = jsonschema.Draft202012Validator(SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise FixtureError(f"schema violation at {where}: {e.message}")


def load_fixture(source) -> Fixture:
    doc = read_document(source)
    validate_document(doc)
    els = doc["elements"]
    labels = [e["label"] for e in els]
    coords = [tuple(e["coords"]) if "coords" in e else None for e in els]
    try:
        if all("features" in e for e in els):
            space = DescriptiveSpace(labels, [e["features"] for e in els], coords)
        else:
            sets = [e["feature_set"] if "feature_set" in e else [e["features"]] for e in els]
            space = DescriptiveSpace(labels, coords=coords, feature_sets=sets)
    except (ValueError, ApproxError) as exc:
        raise FixtureError(f"elements: {exc}") from None
    ops: dict[str, OpTable] = {}
    for k, o in enumerate(doc["operations"]):
        name = o["name"]
        if name in ops:
            raise FixtureError(f"operations/{k}: duplicate operation name {name!r}")
        try:
            if o["rule"] == "mod2-add":
                ops[name] = grid_add_mod2(space, name)
            elif o["rule"] == "min-mul":
                ops[name] = grid_mul_min(space, name)
            else:
                if "table" not in o:
                    raise FixtureError(f"operations/{k}: rule 'table' needs a 'table' field")
                ops[name] = from_rows(space, o["table"], name)
        except (TableError, ClosureError, NotAGridError) as exc:
            raise FixtureError(f"operations/{k} ({name}): {exc}") from None

    subsets: dict[str, Subset] = {}
    for name, members in doc["subsets"].items():
        unknown = [m for m in members if m not in space._index]
        if unknown:
            raise FixtureError(f"subsets/{name}: unknown element labels {unknown}")
        subsets[name] = space.subset(members)

    contexts: dict[str, RingContext] = {}
    reports: dict[str, CheckReport | str] = {}
    for name, c in doc["contexts"].items():
        if c["subset"] not in subsets:
            raise FixtureError(f"contexts/{name}: unknown subset {c['subset']!r}")
        for key in ("add", "mul"):
            if c[key] not in ops:
                raise FixtureError(f"contexts/{name}: unknown operation {c[key]!r}")
        try:
            ctx = RingContext(subsets[c["subset"]], ops[c["add"]], ops[c["mul"]], name)
        except ApproxError as exc:
            raise FixtureError(f"contexts/{name}: {exc}") from None
        contexts[name] = ctx
        try:
            reports[name] = is_approx_ring(ctx)
        except ApproxError as exc:
            reports[name] = f"{type(exc).__name__}: {exc}"
    return Fixture(space, ops, subsets, contexts, doc.get("comment", ""), doc["version"], reports)


def space_elements(space: DescriptiveSpace) -> list[dict]:
    out = []
    for el in space.elements:
        d: dict = {"label": el.label}
        if el.coords is not None:
            d["coords"] = list(el.coords)
        descr = space.description(el.index)
        if space.lifted:
            d["feature_set"] = [list(v) for v in sorted(descr)]
        else:
            d["features"] = list(next(iter(descr)))
        out.append(d)
    return out


def save_fixture(fx: Fixture) -> dict:
    ops = []
    for name, op in fx.ops.items():
        if op.rule in ("mod2-add", "min-mul"):
            ops.append({"name": name, "rule": op.rule})
        else:
            ops.append({"name": name, "rule": "table", "table": op.rows_by_label()})
    doc = {
        "version": fx.version,
        "elements": space_elements(fx.space),
        "operations": ops,
        "subsets": {k: list(s.labels) for k, s in fx.subsets.items()},
        "contexts": {
            k: {"subset": _subset_name(fx, c.R), "add": _op_name(fx, c.add), "mul": _op_name(fx, c.mul)}
            for k, c in fx.contexts.items()
        },
    }
    if fx.comment:
        doc["comment"] = fx.comment
    return doc


def _subset_name(fx: Fixture, S: Subset) -> str:
    for k, v in fx.subsets.items():
        if v == S:
            return k
    raise FixtureError("context subset is not registered under a name")


def _op_name(fx: Fixture, op: OpTable) -> str:
    for k, v in fx.ops.items():
        if v == op:
            return k
    raise FixtureError("context operation is not registered under a name")


def context_document(ctx: RingContext, extra_subsets: dict[str, Subset] | None = None) -> dict:
    """A self-contained fixture document holding one ring context named ``R``."""
    ops = {"add": ctx.add.with_name("add"), "mul": ctx.mul.with_name("mul")}
    subsets = {"R": ctx.R, **(extra_subsets or {})}
    fx = Fixture(ctx.space, ops, subsets, {"R": RingContext(ctx.R, ops["add"], ops["mul"], "R")})
    doc = save_fixture(fx)
    for op in doc["operations"]:
        op["rule"] = "table"
        op["table"] = ops[op["name"]].rows_by_label()
    return doc


def dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


IMAGE16_COMMENT = (
    "16-pixel digital image x00..x33 on a 4x4 grid. x00 and x01 share one colour, "
    "x10 and x11 share another, and the remaining twelve pixels carry pairwise "
    "distinct colours."
)


def builtin_image16() -> dict:
    g1, g2 = [205, 32, 41], [38, 64, 196]
    elements = []
    for i in range(4):
        for j in range(4):
            if (i, j) in ((0, 0), (0, 1)):
                feat = g1
            elif (i, j) in ((1, 0), (1, 1)):
                feat = g2
            else:
                feat = [40 + 50 * i, 40 + 50 * j, 90]
            elements.append({"label": f"x{i}{j}", "coords": [i, j], "features": list(feat)})
    return {
        "version": FORMAT_VERSION,
        "comment": IMAGE16_COMMENT,
        "elements": elements,
        "operations": [{"name": "add", "rule": "mod2-add"}, {"name": "mul", "rule": "min-mul"}],
        "subsets": {
            "R1": ["x01", "x10"],
            "R2": ["x00", "x01", "x10", "x11"],
            "I_prime": ["x01"],
            "I_notprime": ["x01", "x10"],
        },
        "contexts": {
            "R1": {"subset": "R1", "add": "add", "mul": "mul"},
            "R2": {"subset": "R2", "add": "add", "mul": "mul"},
        },
    }


def builtin_f2() -> dict:
    """The two-element field with an injective probe."""
    return {
        "version": FORMAT_VERSION,
        "comment": "classical field F2, injective probe",
        "elements": [{"label": "0", "features": [0]}, {"label": "1", "features": [1]}],
        "operations": [
            {"name": "add", "rule": "table", "table": [["0", "1"], ["1", "0"]]},
            {"name": "mul", "rule": "table", "table": [["0", "0"], ["0", "1"]]},
        ],
        "subsets": {"F": ["0", "1"], "Zero": ["0"]},
        "contexts": {"F2": {"subset": "F", "add": "add", "mul": "mul"}},
    }


BUILTINS = {"image16": builtin_image16, "f2": builtin_f2}
