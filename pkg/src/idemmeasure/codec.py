"""JSON descriptors for scalars, spaces, metrics, maps, measures and thresholds.

Scalars are written as strings ("3", "-1/2", "inf", "-inf"); readers also
accept JSON numbers.  Point labels are strings, arrays (read back as tuples),
or measure objects (for nested measures).  Parsers accept non-canonical atom
lists, canonicalize them and log a notice.
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from typing import Any, Callable, Optional

from .cone import ThresholdFunction
from .errors import ParseError, SchemaError
from .functorial import MeasureSection
from .measures import MEASURE_KINDS, Measure, TestFunction
from .scalars import NEG_INF, ext, format_scalar, parse_scalar
from .spaces import FiniteMap, FiniteMetric, FiniteSpace, discrete_metric, validate_metric

log = logging.getLogger(__name__)


def loads(text: str) -> Any:
    try:
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def load(path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _expect(obj, typ, path):
    if not isinstance(obj, typ):
        name = typ.__name__ if isinstance(typ, type) else "/".join(t.__name__ for t in typ)
        raise SchemaError(f"expected {name}, got {type(obj).__name__}", path)
    return obj


def _field(obj: dict, key: str, path: str):
    if key not in obj:
        raise SchemaError(f"missing field {key!r}", path)
    return obj[key]


def scalar_from_json(value, path="$"):
    if isinstance(value, bool):
        raise SchemaError("booleans are not scalars", path)
    if isinstance(value, str):
        try:
            return parse_scalar(value)
        except ParseError as exc:
            raise SchemaError(str(exc), path) from None
    if isinstance(value, (int, Fraction)):
        return ext(value)
    raise SchemaError(f"expected a scalar, got {type(value).__name__}", path)


def scalar_to_json(value) -> str:
    return format_scalar(value)


def label_from_json(value, path="$"):
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        raise SchemaError("booleans are not point labels", path)
    if isinstance(value, int):
        return value
    if isinstance(value, list):
        return tuple(label_from_json(v, f"{path}[{i}]") for i, v in enumerate(value))
    if isinstance(value, dict) and "kind" in value:
        return measure_from_json(value, path)
    raise SchemaError(f"unsupported point label {value!r}", path)


def label_to_json(label):
    if isinstance(label, Measure):
        return measure_to_json(label)
    if isinstance(label, tuple):
        return [label_to_json(v) for v in label]
    if isinstance(label, Fraction):
        return format_scalar(label)
    return label


def coords_from_json(value, path="$") -> tuple:
    _expect(value, list, path)
    out = []
    for i, v in enumerate(value):
        c = scalar_from_json(v, f"{path}[{i}]")
        if not isinstance(c, Fraction):
            raise SchemaError("coordinates must be finite", f"{path}[{i}]")
        out.append(c)
    return tuple(out)


def point_from_json(obj, path="$") -> tuple:
    _expect(obj, dict, path)
    return coords_from_json(_field(obj, "coords", path), f"{path}.coords")


def space_from_json(obj, path="$", label: Callable = label_from_json) -> FiniteSpace:
    _expect(obj, dict, path)
    pts = _expect(_field(obj, "points", path), list, f"{path}.points")
    labels = [label(p, f"{path}.points[{i}]") for i, p in enumerate(pts)]
    return FiniteSpace(tuple(labels))


def space_to_json(space: FiniteSpace) -> dict:
    return {"points": [label_to_json(p) for p in space]}


def metric_from_json(obj, space: FiniteSpace, path="$", label: Callable = label_from_json) -> FiniteMetric:
    _expect(obj, dict, path)
    rows = _expect(_field(obj, "d", path), list, f"{path}.d")
    table = []
    for i, row in enumerate(rows):
        p = f"{path}.d[{i}]"
        if not isinstance(row, list) or len(row) != 3:
            raise SchemaError("each entry must be [x, y, distance]", p)
        table.append((label(row[0], f"{p}[0]"), label(row[1], f"{p}[1]"),
                      scalar_from_json(row[2], f"{p}[2]")))
    return validate_metric(space, table)


def metric_to_json(metric: FiniteMetric) -> dict:
    pts = metric.space.points
    return {"d": [[label_to_json(x), label_to_json(y), format_scalar(metric.d(x, y))]
                  for i, x in enumerate(pts) for y in pts[i + 1:]]}


def measure_from_json(obj, path="$", label: Callable = label_from_json,
                      space: Optional[FiniteSpace] = None) -> Measure:
    """Read a measure descriptor; without a "space" field the atoms' points form the space."""
    _expect(obj, dict, path)
    kind = _field(obj, "kind", path)
    if kind not in MEASURE_KINDS:
        raise SchemaError(f"kind must be one of {sorted(MEASURE_KINDS)}", f"{path}.kind")
    raw = _expect(_field(obj, "atoms", path), list, f"{path}.atoms")
    atoms = []
    for i, atom in enumerate(raw):
        p = f"{path}.atoms[{i}]"
        _expect(atom, dict, p)
        atoms.append((label(_field(atom, "point", p), f"{p}.point"),
                      scalar_from_json(_field(atom, "weight", p), f"{p}.weight")))
    if "space" in obj:
        space = space_from_json(obj["space"], f"{path}.space", label)
    elif space is None:
        space = FiniteSpace(tuple(dict.fromkeys(pt for pt, _ in atoms)))
    mu = MEASURE_KINDS[kind](space, atoms)
    canonical = [(pt, w) for pt, w in mu.weights.items()]
    if atoms != canonical:
        dropped = sum(1 for _, w in atoms if w == NEG_INF)
        log.warning("%s: atom list canonicalized (%d atoms in, %d out, %d -inf dropped)",
                    path, len(atoms), len(canonical), dropped)
    return mu


def measure_to_json(mu: Measure) -> dict:
    return {
        "kind": mu.kind,
        "space": space_to_json(mu.space),
        "atoms": [{"point": label_to_json(p), "weight": format_scalar(w)} for p, w in mu.weights.items()],
    }


def _lookup_table(raw, space: FiniteSpace, path: str, label: Callable, convert: Callable) -> dict:
    """Values keyed by point: a JSON object (string labels) or a list of [point, value] pairs."""
    if isinstance(raw, dict):
        return {k: convert(v, f"{path}.{k}") for k, v in raw.items()}
    if isinstance(raw, list):
        out = {}
        for i, row in enumerate(raw):
            p = f"{path}[{i}]"
            if not isinstance(row, list) or len(row) != 2:
                raise SchemaError("expected [point, value]", p)
            out[label(row[0], f"{p}[0]")] = convert(row[1], f"{p}[1]")
        return out
    raise SchemaError("expected an object or a list of pairs", path)


def function_from_json(obj, path="$", label: Callable = label_from_json,
                       space: Optional[FiniteSpace] = None) -> TestFunction:
    _expect(obj, dict, path)
    if "space" in obj:
        space = space_from_json(obj["space"], f"{path}.space", label)
    elif space is None:
        raise SchemaError("missing field 'space'", path)
    values = _lookup_table(_field(obj, "values", path), space, f"{path}.values", label, scalar_from_json)
    return TestFunction(space, values)


def function_to_json(phi: TestFunction) -> dict:
    return {"space": space_to_json(phi.space),
            "values": [[label_to_json(p), format_scalar(v)] for p, v in phi.items()]}


def map_from_json(obj, path="$", label: Callable = label_from_json) -> FiniteMap:
    _expect(obj, dict, path)
    source = space_from_json(_field(obj, "source", path), f"{path}.source", label)
    target = space_from_json(_field(obj, "target", path), f"{path}.target", label)
    assignment = _lookup_table(_field(obj, "assignment", path), source, f"{path}.assignment",
                               label, label)
    return FiniteMap(source, target, assignment)


def map_to_json(f: FiniteMap) -> dict:
    return {"source": space_to_json(f.source), "target": space_to_json(f.target),
            "assignment": [[label_to_json(x), label_to_json(y)] for x, y in f.assignment.items()]}


def threshold_from_json(obj, path="$", label: Callable = label_from_json) -> ThresholdFunction:
    _expect(obj, dict, path)
    space = space_from_json(_field(obj, "space", path), f"{path}.space", label)
    metric = (metric_from_json(obj["metric"], space, f"{path}.metric", label)
              if "metric" in obj else discrete_metric(space))
    tau = _lookup_table(_field(obj, "tau", path), space, f"{path}.tau", label, scalar_from_json)
    return ThresholdFunction(metric, tau)


def threshold_to_json(A: ThresholdFunction) -> dict:
    return {"space": space_to_json(A.space), "metric": metric_to_json(A.metric),
            "tau": [[label_to_json(p), format_scalar(t)] for p, t in A.items()]}


def section_from_json(obj, path="$", label: Callable = label_from_json) -> MeasureSection:
    """``{"map": <map>, "sections": [{"point": x, "measure": <measure on the map source>}]}``."""
    _expect(obj, dict, path)
    f = map_from_json(_field(obj, "map", path), f"{path}.map", label)
    rows = _expect(_field(obj, "sections", path), list, f"{path}.sections")
    s = {}
    for i, row in enumerate(rows):
        p = f"{path}.sections[{i}]"
        _expect(row, dict, p)
        x = label(_field(row, "point", p), f"{p}.point")
        s[x] = measure_from_json(_field(row, "measure", p), f"{p}.measure", label, space=f.source)
    return MeasureSection(f, s)


def coord_label(value, path="$"):
    """Label reader for spaces of coordinate points (arrays of finite scalars)."""
    return coords_from_json(value, path)

