"""
JSON problem documents: schema, parsing into domain objects, canonical dumps.

A document holds exactly one of "complex", "weights" or "torus_example",
plus optional "spec" {A, B, gamma}, top-level "gamma", "root_system" and
"options" {series_order, region_I}.  Integers may be JSON numbers or
decimal strings (the latter for values beyond the 53-bit safe range).
"""
import json
from dataclasses import dataclass, replace

import jsonschema

from .algebra import SAFE_INT
from .genfun import GenFunSpec, HypothesisError, PiecewiseWeight, check_positivity, validate_weight
from .geometry import CellComplex, GeometryError, NotPointedError, enumerate_cells
from .weyl import RootSystemError, build_root_system, root_system_from_simple_roots
from .zeta import WeightDataError, WeightDatum, ZetaProblem, build_complex_from_weights, torus_example

_INT = {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": "^-?[0-9]+$"}]}
_VEC = {"type": "array", "items": _INT}
_MAT = {"type": "array", "items": _VEC}
_POS = {"type": "integer", "minimum": 1}

_GAMMA = {"anyOf": [
    {"const": "zero"},
    {"type": "array", "items": {
        "type": "object",
        "properties": {"cell": {"type": "string", "pattern": "^[0+]*(\\|[-0+]+)?$"}, "value": _VEC},
        "required": ["cell", "value"],
        "additionalProperties": False,
    }},
]}

SCHEMA = {
    "type": "object",
    "properties": {
        "complex": {
            "type": "object",
            "properties": {"dim": {"type": "integer", "minimum": 1}, "bounding": _MAT, "internal": _MAT},
            "required": ["dim", "bounding"],
            "additionalProperties": False,
        },
        "weights": {
            "type": "object",
            "properties": {
                "l": {"type": "integer", "minimum": 0},
                "d": {"type": "integer", "minimum": 0},
                "weights": _MAT,
                "components": {"type": "array", "items": {"type": "array", "items": _POS, "minItems": 1}},
                "contragredient_dominant": _MAT,
                "fundamental_roots": _MAT,
                "det_rho": _VEC,
                "alpha0": _VEC,
            },
            "required": ["l", "d", "weights", "components", "contragredient_dominant", "fundamental_roots"],
            "additionalProperties": False,
        },
        "torus_example": {
            "type": "object",
            "properties": {"d": {"type": "integer", "minimum": 2}, "k": {"type": "integer", "minimum": 3}},
            "required": ["d", "k"],
            "additionalProperties": False,
        },
        "spec": {
            "type": "object",
            "properties": {"A": _VEC, "B": _VEC, "gamma": _GAMMA},
            "required": ["A", "B"],
            "additionalProperties": False,
        },
        "gamma": _GAMMA,
        "root_system": {"anyOf": [
            {"type": "object", "properties": {"type": {"enum": ["A", "B", "C", "D"]}, "rank": _POS},
             "required": ["type", "rank"], "additionalProperties": False},
            {"type": "object", "properties": {"simple_roots": _MAT},
             "required": ["simple_roots"], "additionalProperties": False},
        ]},
        "options": {
            "type": "object",
            "properties": {"series_order": {"type": "integer", "minimum": 0},
                           "region_I": {"type": "array", "items": _POS, "uniqueItems": True}},
            "additionalProperties": False,
        },
    },
    "oneOf": [{"required": ["complex"]}, {"required": ["weights"]}, {"required": ["torus_example"]}],
    "additionalProperties": False,
}


class SchemaError(ValueError):
    """Malformed document; ``pointer`` is a JSON pointer to the offending field."""

    def __init__(self, message, pointer=""):
        super().__init__(message)
        self.pointer = pointer

    def to_json(self):
        return {"error": "schema", "message": str(self), "pointer": self.pointer}


def _pointer(path):
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in path)


def validate(raw):
    validator = jsonschema.Draft202012Validator(SCHEMA)
    errors = sorted(validator.iter_errors(raw), key=lambda e: (list(e.absolute_path), e.message))
    if not errors:
        return
    err = jsonschema.exceptions.best_match(errors)
    if err.validator == "oneOf" and not err.absolute_path:
        present = [k for k in ("complex", "weights", "torus_example") if isinstance(raw, dict) and k in raw]
        msg = ("document needs exactly one of complex, weights, torus_example (found %s)"
               % (", ".join(present) or "none"))
        raise SchemaError(msg, "")
    raise SchemaError(err.message, _pointer(err.absolute_path))


def _int(v):
    return int(v)


def _vec(v):
    return tuple(_int(x) for x in v)


def _canon_value(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v) if abs(v) >= SAFE_INT else v
    if isinstance(v, str) and v.lstrip("-").isdigit():
        n = int(v)
        return str(n) if abs(n) >= SAFE_INT else n
    if isinstance(v, list):
        return [_canon_value(x) for x in v]
    if isinstance(v, dict):
        # cell labels such as "000" are strings, not integers
        return {k: x if k == "cell" else _canon_value(x) for k, x in v.items()}
    return v


def canonical(raw):
    """Validate and normalize integer encodings (small as numbers, large as strings)."""
    validate(raw)
    return _canon_value(raw)


def dumps(obj):
    """Canonical JSON text: sorted keys, compact separators, UTF-8 safe."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def loads(text):
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("invalid JSON: %s" % exc.msg, "") from None
    return canonical(raw)


@dataclass
class Problem:
    """A parsed document: always a complex and a spec; zeta-capable kinds also carry a ZetaProblem."""
    kind: str
    complex: CellComplex
    spec: GenFunSpec
    zeta: ZetaProblem = None
    datum: WeightDatum = None
    torus: tuple = None
    options: dict = None

    @property
    def region(self):
        return tuple(i - 1 for i in (self.options or {}).get("region_I", []))

    @property
    def series_order(self):
        return (self.options or {}).get("series_order", 12)


def parse_gamma(raw, cx, where):
    """Turn a gamma section into a PiecewiseWeight; labels must name cells of cx."""
    if raw is None or raw == "zero":
        return PiecewiseWeight.zero(cx.dim)
    cells = enumerate_cells(cx)
    by_label = {c.label(): c for c in cells}
    assignment = {}
    for idx, item in enumerate(raw):
        cell = by_label.get(item["cell"])
        if cell is None:
            raise SchemaError("no cell labelled %r; cells are %s" % (item["cell"], sorted(by_label)),
                              "%s/%d/cell" % (where, idx))
        value = _vec(item["value"])
        if len(value) != cx.dim:
            raise SchemaError("weight vector has length %d, expected %d" % (len(value), cx.dim),
                              "%s/%d/value" % (where, idx))
        assignment[cell.signs] = value
    gamma = PiecewiseWeight(cx.dim, assignment)
    report = validate_weight(cx, gamma, cells)
    if report["undefined"]:
        raise HypothesisError("gamma is not defined on cells %s" % ", ".join(report["undefined"]))
    if report["violations"]:
        v = report["violations"][0]
        raise HypothesisError("gamma is not compatible: C_%s - C_%s is not orthogonal to ray %r of %s"
                              % (v["cell"], v["face"], v["ray"], v["face"]))
    return gamma


def _root_system(raw, where="/root_system"):
    if raw is None:
        return None
    try:
        if "simple_roots" in raw:
            return root_system_from_simple_roots([_vec(a) for a in raw["simple_roots"]])
        return build_root_system(raw["type"], raw["rank"])
    except RootSystemError as exc:
        raise SchemaError(str(exc), where) from None


def _check_len(vectors, m, where):
    for i, v in enumerate(vectors):
        if len(v) != m:
            raise SchemaError("vector has length %d, expected %d" % (len(v), m), "%s/%d" % (where, i))


def _gamma_section(doc, gamma_override):
    if gamma_override is not None:
        return gamma_override, "/gamma"
    if "gamma" in doc:
        return doc["gamma"], "/gamma"
    return doc.get("spec", {}).get("gamma"), "/spec/gamma"


def build_problem(doc, gamma_override=None):
    """Domain objects for a canonical document.  gamma_override replaces any gamma in the document."""
    options = doc.get("options", {})
    graw, gwhere = _gamma_section(doc, gamma_override)
    try:
        if "complex" in doc:
            return _complex_problem(doc, graw, gwhere, options)
        if "weights" in doc:
            return _weights_problem(doc, graw, gwhere, options)
        return _torus_problem(doc, graw, gwhere, options)
    except NotPointedError as exc:
        raise HypothesisError(str(exc)) from None


def _complex_problem(doc, graw, gwhere, options):
    c = doc["complex"]
    m = c["dim"]
    bounding = [_vec(v) for v in c["bounding"]]
    internal = [_vec(v) for v in c.get("internal", [])]
    _check_len(bounding, m, "/complex/bounding")
    _check_len(internal, m, "/complex/internal")
    try:
        cx = CellComplex(m, tuple(bounding), tuple(internal))
    except GeometryError as exc:
        raise SchemaError(str(exc), "/complex") from None
    if "spec" not in doc:
        raise SchemaError("a complex document needs a spec with A and B", "/spec")
    A, B = _vec(doc["spec"]["A"]), _vec(doc["spec"]["B"])
    for name, v in (("A", A), ("B", B)):
        if len(v) != m:
            raise SchemaError("%s has length %d, expected %d" % (name, len(v), m), "/spec/" + name)
    spec = GenFunSpec(A, B, parse_gamma(graw, cx, gwhere))
    check_positivity(cx, spec)
    rs = _root_system(doc.get("root_system"))
    l = rs.rank if rs else 0
    if l > len(bounding):
        raise SchemaError("root system rank %d exceeds the number of bounding hyperplanes" % l, "/root_system")
    zp = ZetaProblem(cx, spec, rs, l, m - l, 0)
    return Problem("complex", cx, spec, zeta=zp, options=options)


def _weights_problem(doc, graw, gwhere, options):
    w = doc["weights"]
    rs = _root_system(doc.get("root_system"))
    if w["l"] and rs is None:
        raise SchemaError("weights with l > 0 need a root_system", "/root_system")
    n = len(w["weights"])
    for i, comp in enumerate(w["components"]):
        for j, k in enumerate(comp):
            if k > n:
                raise SchemaError("component index %d exceeds the %d weights" % (k, n),
                                  "/weights/components/%d/%d" % (i, j))
    m = w["l"] + w["d"]
    for key in ("weights", "contragredient_dominant", "fundamental_roots"):
        _check_len(w[key], m, "/weights/" + key)
    try:
        wd = WeightDatum(
            w["l"], w["d"],
            weights=[_vec(v) for v in w["weights"]],
            components=[[k - 1 for k in comp] for comp in w["components"]],
            contragredient_dominant=[_vec(v) for v in w["contragredient_dominant"]],
            fundamental_roots=[_vec(v) for v in w["fundamental_roots"]],
            root_system=rs,
            det_rho=_vec(w["det_rho"]) if "det_rho" in w else None,
            alpha0=_vec(w["alpha0"]) if "alpha0" in w else None,
        )
        zp = build_complex_from_weights(wd)
    except WeightDataError as exc:
        raise SchemaError(str(exc), "/weights") from None
    if "spec" in doc:
        raise SchemaError("A and B are derived from the weights; give gamma at top level", "/spec")
    gamma = parse_gamma(graw, zp.complex, gwhere)
    zp = replace(zp, spec=GenFunSpec(zp.spec.A, zp.spec.B, gamma))
    return Problem("weights", zp.complex, zp.spec, zeta=zp, datum=wd, options=options)


def _torus_problem(doc, graw, gwhere, options):
    d, k = doc["torus_example"]["d"], doc["torus_example"]["k"]
    if "spec" in doc:
        raise SchemaError("the torus example fixes A and B", "/spec")
    zp = torus_example(d, k)
    if graw not in (None, "zero"):
        gamma = parse_gamma(graw, zp.complex, gwhere)
        zp = replace(zp, spec=GenFunSpec(zp.spec.A, zp.spec.B, gamma))
    return Problem("torus_example", zp.complex, zp.spec, zeta=zp, torus=(d, k), options=options)


def torus_document(d, k, explicit=False):
    """Document for the torus family; explicit=True spells out the complex and spec."""
    if not explicit:
        return {"torus_example": {"d": d, "k": k}}
    zp = torus_example(d, k)
    return {
        "complex": {"dim": d, "bounding": [list(v) for v in zp.complex.bounding], "internal": []},
        "spec": {"A": list(zp.spec.A), "B": list(zp.spec.B), "gamma": "zero"},
    }
