"""JSON formats for Hopf algebras, group tables, morphisms, actions and subspaces.

Structure is checked with JSON Schema; index ranges and scalars are checked
by hand so that every rejection names the offending field.  Scalars are
written as canonical ``"p/q"`` strings (``"p"`` when q = 1).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from .errors import DimensionError, PreconditionError, SchemaError
from .groups import GroupTable
from .hopf_model import HopfAlgebra, Morphism, verify_hopf
from .linear_core import Matrix, Subspace, format_scalar, parse_scalar
from .smash import Action

_SCALAR = {"type": ["string", "integer"]}
_INDEX = {"type": "integer", "minimum": 0}
_TRIPLE = {"type": "array", "prefixItems": [_INDEX, _INDEX, _INDEX, _SCALAR],
           "minItems": 4, "maxItems": 4}
_MATRIX = {"type": "array", "items": {"type": "array", "items": _SCALAR}}
_REF = {"anyOf": [{"type": "string"}, {"type": "object"}]}

HOPF_SCHEMA = {
    "type": "object",
    "required": ["dim", "basis", "mul", "comul", "unit", "counit", "antipode"],
    "properties": {
        "dim": _INDEX,
        "name": {"type": "string"},
        "basis": {"type": "array", "items": {"type": "string"}},
        "mul": {"type": "array", "items": _TRIPLE},
        "comul": {"type": "array", "items": _TRIPLE},
        "unit": {"type": "array", "items": _SCALAR},
        "counit": {"type": "array", "items": _SCALAR},
        "antipode": _MATRIX,
    },
}

GROUP_SCHEMA = {
    "type": "object",
    "required": ["order", "table"],
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "identity": _INDEX,
        "name": {"type": "string"},
        "table": {"type": "array", "items": {"type": "array", "items": _INDEX}},
    },
}

MORPHISM_SCHEMA = {
    "type": "object",
    "required": ["dom", "cod", "matrix"],
    "properties": {"dom": _REF, "cod": _REF, "matrix": _MATRIX},
}

ACTION_SCHEMA = {
    "type": "object",
    "required": ["actor", "target", "map"],
    "properties": {"actor": _REF, "target": _REF, "map": _MATRIX},
}

SUBSPACE_SCHEMA = {
    "anyOf": [
        _MATRIX,
        {"type": "object", "required": ["vectors"],
         "properties": {"ambient_dim": _INDEX, "vectors": _MATRIX}},
    ],
}


def _validate(data: Any, schema: dict, what: str) -> None:
    err = best_match(Draft202012Validator(schema).iter_errors(data))
    if err is None:
        return
    path = "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)
    field = path.lstrip(".")
    if err.validator == "required":
        missing = next((k for k in err.validator_value if k not in err.instance), "")
        field = f"{field}.{missing}" if field else missing
    field = field or what
    raise SchemaError(err.message, field)


def read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", Path(path).name) from None
    except OSError as exc:
        raise SchemaError(f"cannot read file: {exc.strerror}", str(path)) from None


def dumps(data: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


# -- Hopf algebras -----------------------------------------------------------

def _dense(values: list, n: int, field: str) -> dict[int, Any]:
    if len(values) != n:
        raise SchemaError(f"expected {n} entries, got {len(values)}", field)
    out = {}
    for i, x in enumerate(values):
        c = parse_scalar(x, f"{field}[{i}]")
        if c:
            out[i] = c
    return out


def _square(rows: list, n: int, m: int, field: str) -> list[dict[int, Any]]:
    """Columns of an n x m row-major matrix."""
    if len(rows) != n:
        raise SchemaError(f"expected {n} rows, got {len(rows)}", field)
    cols: list[dict[int, Any]] = [{} for _ in range(m)]
    for r, row in enumerate(rows):
        if len(row) != m:
            raise SchemaError(f"row {r} has {len(row)} entries, expected {m}", f"{field}[{r}]")
        for c, x in enumerate(row):
            v = parse_scalar(x, f"{field}[{r}][{c}]")
            if v:
                cols[c][r] = v
    return cols


def hopf_from_json(data: Any) -> HopfAlgebra:
    _validate(data, HOPF_SCHEMA, "hopf")
    n = data["dim"]
    if len(data["basis"]) != n:
        raise SchemaError(f"expected {n} basis names", "basis")
    if len(set(data["basis"])) != n:
        raise SchemaError("basis names must be distinct", "basis")

    def triples(key):
        out: dict = {}
        for t, (i, j, k, x) in enumerate(data[key]):
            field = f"{key}[{t}]"
            if max(i, j, k) >= n:
                raise SchemaError(f"index out of range for dimension {n}", field)
            if (i, j, k) in out:
                raise SchemaError(f"duplicate entry ({i},{j},{k})", field)
            out[(i, j, k)] = parse_scalar(x, f"{field}[3]")
        return out

    mul: dict = {}
    for (i, j, k), c in triples("mul").items():
        if c:
            mul.setdefault((i, j), {})[k] = c
    comul: list[dict] = [{} for _ in range(n)]
    for (i, j, k), c in triples("comul").items():
        if c:
            comul[i][(j, k)] = c
    unit = _dense(data["unit"], n, "unit")
    counit = _dense(data["counit"], n, "counit")
    antipode = _square(data["antipode"], n, n, "antipode")
    return HopfAlgebra(data["basis"], mul, comul, unit, counit, antipode, name=data.get("name", ""))


def hopf_to_json(h: HopfAlgebra) -> dict:
    n = h.dim
    mul = [[i, j, k, format_scalar(c)] for (i, j), v in sorted(h.mul.items())
           for k, c in sorted(v.items())]
    comul = [[i, j, k, format_scalar(c)] for i in range(n)
             for (j, k), c in sorted(h.comul[i].items())]
    anti = Matrix.from_columns(h.antipode, n)
    out = {
        "dim": n,
        "basis": list(h.basis),
        "mul": mul,
        "comul": comul,
        "unit": [format_scalar(h.unit.get(i, 0)) for i in range(n)],
        "counit": [format_scalar(c) for c in h.counit],
        "antipode": anti.to_json(),
    }
    if h.name:
        out["name"] = h.name
    return out


# -- groups ------------------------------------------------------------------

def group_from_json(data: Any, name: str = "") -> GroupTable:
    _validate(data, GROUP_SCHEMA, "group")
    n = data["order"]
    rows = data["table"]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise SchemaError(f"table must be {n}x{n}", "table")
    if any(x >= n for r in rows for x in r):
        raise SchemaError("table entry out of range", "table")
    return GroupTable.from_rows(rows, data.get("identity", 0), data.get("name", name))


def group_to_json(g: GroupTable) -> dict:
    out = g.to_json()
    if g.name:
        out["name"] = g.name
    return out


# -- references to other files ----------------------------------------------

class Loader:
    """Resolves ``dom``/``cod``/``actor``/``target`` references.

    A reference is either an inline Hopf algebra object or a path relative
    to the referring file.  Loaded files are cached by resolved path.  A
    strict loader also refuses algebras that fail any cocommutative Hopf
    axiom, since every construction assumes them.
    """

    def __init__(self, strict: bool = False):
        self.strict = strict
        self._cache: dict[Path, HopfAlgebra] = {}
        self.files: list[Path] = []

    def _checked(self, h: HopfAlgebra, where: str) -> HopfAlgebra:
        if self.strict:
            bad = verify_hopf(h).failures()
            if bad:
                raise PreconditionError(f"{where} is not a cocommutative Hopf algebra: fails {', '.join(bad)}")
        return h

    def note(self, path: Path) -> None:
        path = Path(path).resolve()
        if path not in self.files:
            self.files.append(path)

    def hopf(self, path: str | Path) -> HopfAlgebra:
        p = Path(path).resolve()
        if p not in self._cache:
            self.note(p)
            data = read_json(p)
            try:
                h = hopf_from_json(data)
            except SchemaError as exc:
                raise SchemaError(exc.detail, f"{p.name}:{exc.field}") from None
            except DimensionError as exc:
                raise SchemaError(str(exc), p.name) from None
            self._cache[p] = self._checked(h, p.name)
        return self._cache[p]

    def ref(self, value: Any, base: Path, field: str) -> HopfAlgebra:
        if isinstance(value, dict):
            try:
                h = hopf_from_json(value)
            except SchemaError as exc:
                raise SchemaError(exc.detail, f"{field}.{exc.field}") from None
            return self._checked(h, f"inline {field}")
        return self.hopf(base / value)

    def _load(self, path: str | Path, schema: dict, what: str) -> tuple[Any, Path]:
        p = Path(path).resolve()
        self.note(p)
        data = read_json(p)
        _validate(data, schema, what)
        return data, p.parent

    def morphism(self, path: str | Path) -> Morphism:
        data, base = self._load(path, MORPHISM_SCHEMA, "morphism")
        return morphism_from_json(data, lambda v, f: self.ref(v, base, f))

    def action(self, path: str | Path) -> Action:
        data, base = self._load(path, ACTION_SCHEMA, "action")
        return action_from_json(data, lambda v, f: self.ref(v, base, f))

    def subspace(self, path: str | Path, ambient_dim: int) -> Subspace:
        p = Path(path).resolve()
        self.note(p)
        return subspace_from_json(read_json(p), ambient_dim)


Resolver = Callable[[Any, str], HopfAlgebra]


def morphism_from_json(data: Any, resolve: Resolver) -> Morphism:
    _validate(data, MORPHISM_SCHEMA, "morphism")
    dom = resolve(data["dom"], "dom")
    cod = resolve(data["cod"], "cod")
    cols = _square(data["matrix"], cod.dim, dom.dim, "matrix")
    return Morphism.from_columns(dom, cod, cols)


def morphism_to_json(f: Morphism, dom: Any = None, cod: Any = None) -> dict:
    """Objects are inlined unless references are given."""
    return {"dom": hopf_to_json(f.dom) if dom is None else dom,
            "cod": hopf_to_json(f.cod) if cod is None else cod,
            "matrix": f.matrix.to_json()}


def action_from_json(data: Any, resolve: Resolver) -> Action:
    _validate(data, ACTION_SCHEMA, "action")
    actor = resolve(data["actor"], "actor")
    target = resolve(data["target"], "target")
    cols = _square(data["map"], target.dim, actor.dim * target.dim, "map")
    return Action(actor, target, Matrix.from_columns(cols, target.dim))


def action_to_json(act: Action, actor: Any = None, target: Any = None) -> dict:
    return {"actor": hopf_to_json(act.actor) if actor is None else actor,
            "target": hopf_to_json(act.target) if target is None else target,
            "map": act.matrix.to_json()}


def subspace_from_json(data: Any, ambient_dim: int) -> Subspace:
    _validate(data, SUBSPACE_SCHEMA, "subspace")
    vectors = data if isinstance(data, list) else data["vectors"]
    field = "subspace" if isinstance(data, list) else "vectors"
    if isinstance(data, dict) and data.get("ambient_dim", ambient_dim) != ambient_dim:
        raise SchemaError(f"ambient_dim must be {ambient_dim}", "ambient_dim")
    rows = []
    for r, v in enumerate(vectors):
        rows.append(_dense(v, ambient_dim, f"{field}[{r}]"))
    return Subspace(ambient_dim, rows)


def subspace_to_json(s: Subspace) -> dict:
    return {"ambient_dim": s.ambient_dim,
            "vectors": [[format_scalar(v.get(i, 0)) for i in range(s.ambient_dim)] for v in s.rows]}
