"""Schema-validated degree data: per-family degree entries, group-order
expressions, p-part cap rows, and the sporadic coprime-degree pairs.

The embedded JSON files hold exactly the displayed degree expressions;
an external file in the same schema can be supplied to extend a family
with richer degree tables.
"""

from __future__ import annotations

import functools
import importlib.resources
import json
from dataclasses import dataclass, field

import jsonschema

from .cyclotomic import cyclotomic
from .degree_algebra import FactoredDegree, PrimePower, prime_powers

FAMILIES = ("F4", "E6", "2E6", "E7", "E8")

_DEGREE_SCHEMA = {
    "type": "object",
    "required": ["t", "a", "exps"],
    "additionalProperties": False,
    "properties": {
        "t": {"type": "integer", "minimum": 1, "maximum": 6},
        "a": {"type": "integer", "minimum": 0},
        "exps": {
            "type": "object",
            "patternProperties": {"^([1-9]|[12][0-9]|30)$": {"type": "integer", "minimum": 1}},
            "additionalProperties": False,
        },
    },
}

_CONSTRAINT_SCHEMA = {
    "type": "object",
    "required": ["type"],
    "properties": {
        "type": {"enum": ["q_odd", "q_even", "q_ge", "q_gt", "p_eq", "p_ne", "cong"]},
        "value": {"type": "integer"},
        "c": {"type": "integer"},
        "m": {"type": "integer", "minimum": 2},
    },
}

_FAMILY_SCHEMA = {
    "type": "object",
    "required": ["family", "q_floor", "order", "a_H", "b_H", "c_H",
                 "ppart_cap", "top_phi", "entries", "torus_orders"],
    "properties": {
        "family": {"enum": list(FAMILIES)},
        "q_floor": {"type": "integer", "minimum": 2},
        "order": _DEGREE_SCHEMA,
        "order_source": {"type": "string"},
        "a_H": {"type": "integer"},
        "b_H": {"type": "integer"},
        "c_H": {"type": "integer"},
        "ppart_cap": {
            "type": "object",
            "required": ["odd", "even"],
            "properties": {
                "odd": {"type": "object", "required": ["exp", "half"]},
                "even": {"type": "object", "required": ["exp", "half"]},
            },
        },
        "top_phi": {"type": "array", "items": {"type": "integer", "minimum": 1, "maximum": 30}},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "kind", "version", "constraints", "degree", "source"],
                "properties": {
                    "label": {"type": "string"},
                    "kind": {"enum": ["unipotent", "semisimple", "other"]},
                    "version": {"enum": ["simple", "sc", "ad"]},
                    "constraints": {"type": "array", "items": _CONSTRAINT_SCHEMA},
                    "degree": _DEGREE_SCHEMA,
                    "multiplicity": {"type": "integer", "minimum": 1},
                    "source": {"type": "string"},
                },
            },
        },
        "isolated_labels": {"type": "array", "items": {"type": "string"}},
        "smallest": {"type": "object", "required": ["odd", "even"]},
        "exceptional_pair": {
            "anyOf": [{"type": "null"},
                      {"type": "array", "items": {"type": "string"},
                       "minItems": 2, "maxItems": 2}],
        },
        "torus_orders": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["indices", "torus", "entry_label"],
                "properties": {
                    "indices": {"type": "array", "items": {"type": "integer"}},
                    "torus": _DEGREE_SCHEMA,
                    "entry_label": {"type": "string"},
                },
            },
        },
    },
}

_SPORADIC_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["group", "pairs"],
        "properties": {
            "group": {"type": "string"},
            "pairs": {
                "type": "array", "minItems": 2, "maxItems": 2,
                "items": {
                    "type": "object",
                    "required": ["label", "factors"],
                    "properties": {
                        "label": {"type": "string"},
                        "factors": {
                            "type": "object",
                            "patternProperties": {"^[0-9]+$": {"type": "integer", "minimum": 1}},
                            "additionalProperties": False,
                        },
                    },
                },
            },
        },
    },
}


class CatalogError(ValueError):
    """Raised for schema violations or load-time invariant failures."""


@dataclass(frozen=True)
class Constraint:
    type: str
    value: int | None = None
    c: int | None = None
    m: int | None = None

    def admits(self, q: PrimePower) -> bool:
        qv = q.value
        match self.type:
            case "q_odd":
                return qv % 2 == 1
            case "q_even":
                return qv % 2 == 0
            case "q_ge":
                return qv >= self.value
            case "q_gt":
                return qv > self.value
            case "p_eq":
                return q.p == self.value
            case "p_ne":
                return q.p != self.value
            case "cong":
                return qv % self.m == self.c
        raise CatalogError(f"unknown constraint type {self.type!r}")


@dataclass(frozen=True)
class DegreeEntry:
    label: str
    kind: str
    version: str
    constraints: tuple[Constraint, ...]
    degree: FactoredDegree
    source: str
    multiplicity: int | None = None

    def admits(self, q: PrimePower) -> bool:
        return all(c.admits(q) for c in self.constraints)


@dataclass(frozen=True)
class TorusOrder:
    indices: tuple[int, ...]
    torus: FactoredDegree
    entry_label: str


@dataclass(frozen=True)
class SporadicPair:
    group: str
    char_labels: tuple[str, str]
    degrees: tuple[dict[int, int], dict[int, int]]

    def values(self) -> tuple[int, int]:
        out = []
        for fac in self.degrees:
            v = 1
            for p, e in fac.items():
                v *= p ** e
            out.append(v)
        return tuple(out)


@dataclass(frozen=True)
class Table1Entry:
    group_pattern: str
    symbol: str
    params: tuple[str, ...]
    param_min: dict[str, int]
    exponent: str

    def ppart_exponent(self, **params: int) -> int:
        if set(params) != set(self.params):
            raise ValueError(
                f"{self.group_pattern} expects parameters {self.params}, got {sorted(params)}")
        for name, lo in self.param_min.items():
            if params[name] < lo:
                raise ValueError(
                    f"{self.group_pattern}: parameter {name}={params[name]} below minimum {lo}")
        val = eval(self.exponent, {"__builtins__": {}}, dict(params))  # noqa: S307 - fixed table expressions
        if val < 1:
            raise ValueError(f"{self.group_pattern}: nonpositive exponent for {params}")
        return val


@dataclass(frozen=True)
class FamilyCatalog:
    family: str
    q_floor: int
    order: FactoredDegree
    a_H: int
    b_H: int
    c_H: int
    ppart_cap: dict
    top_phi: tuple[int, ...]
    entries: tuple[DegreeEntry, ...]
    isolated_labels: tuple[str, ...]
    smallest: dict[str, str]
    exceptional_pair: tuple[str, str] | None
    torus_orders: tuple[TorusOrder, ...]

    def entry(self, label: str) -> DegreeEntry:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(f"{self.family}: no entry labeled {label!r}")

    def admissible_q(self, q_max: int) -> list[PrimePower]:
        return prime_powers(self.q_floor, q_max)

    def check_admissible(self, q: PrimePower) -> None:
        if q.value < self.q_floor:
            raise ConstraintError(
                f"{self.family} requires q >= {self.q_floor}, got q = {q.value}")

    def order_at(self, q: PrimePower) -> int:
        self.check_admissible(q)
        return self.order.evaluate(q)

    def steinberg_degree(self, q: PrimePower) -> int:
        self.check_admissible(q)
        return q.value ** self.a_H

    def degrees_at(self, q: PrimePower, versions=("simple",)) -> list[tuple[str, int]]:
        """Evaluations of all admissible entries, plus the trivial and
        Steinberg degrees.  Deterministic order: ascending by value."""
        self.check_admissible(q)
        out = [("1", 1), ("Steinberg", self.steinberg_degree(q))]
        for e in self.entries:
            if e.version in versions and e.admits(q):
                out.append((e.label, e.degree.evaluate(q)))
        return sorted(out, key=lambda kv: (kv[1], kv[0]))

    def cap_at(self, q: PrimePower) -> int:
        spec = self.ppart_cap["odd" if q.value % 2 else "even"]
        cap = q.value ** spec["exp"]
        return cap // 2 if spec["half"] else cap


class ConstraintError(ValueError):
    """q outside the family's admissible range."""


def _degree_from_json(obj) -> FactoredDegree:
    return FactoredDegree.make(obj["t"], obj["a"],
                               {int(k): v for k, v in obj["exps"].items()})


def _read_data(name: str) -> str:
    return importlib.resources.files("excdeg.data").joinpath(name).read_text("utf-8")


def _validate(instance, schema, what: str) -> None:
    try:
        jsonschema.validate(instance, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise CatalogError(f"{what}: schema violation at {path}: {exc.message}") from exc


_DIMENSIONS = {"F4": 52, "E6": 78, "2E6": 78, "E7": 133, "E8": 248}
_SMOKE_Q = {"F4": 3, "E6": 2, "2E6": 2, "E7": 2, "E8": 2}


def _check_invariants(cat: FamilyCatalog) -> None:
    # order polynomial total degree equals the group dimension
    dim = cat.order.q_exp + sum(e * (len(cyclotomic(k)) - 1)
                                for k, e in cat.order.cyclo_exps)
    if dim != _DIMENSIONS[cat.family]:
        raise CatalogError(
            f"{cat.family}: order q-degree {dim} != {_DIMENSIONS[cat.family]}")
    for smoke in (cat.q_floor, _next_prime_power(cat.q_floor)):
        q = PrimePower.from_value(smoke)
        order = cat.order_at(q)
        for e in cat.entries:
            if not e.admits(q):
                continue
            v = e.degree.evaluate(q)  # raises IntegralityViolation on bad data
            if e.version == "simple" and order % v != 0:
                raise CatalogError(
                    f"{cat.family}: entry {e.label!r} does not divide the order at q={q}")
    for label in cat.isolated_labels:
        cat.entry(label)
    for t in cat.torus_orders:
        cat.entry(t.entry_label)
    if cat.exceptional_pair:
        for label in cat.exceptional_pair:
            cat.entry(label)


def _next_prime_power(q: int) -> int:
    from .degree_algebra import is_prime_power
    q += 1
    while not is_prime_power(q):
        q += 1
    return q


@functools.cache
def load_catalog(family: str, path: str | None = None) -> FamilyCatalog:
    """Load and validate one family catalog.  ``path`` overrides the
    embedded data file with an external file in the same schema."""
    if family not in FAMILIES:
        raise CatalogError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if path is None:
        raw = json.loads(_read_data(f"{family}.json"))
    else:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    _validate(raw, _FAMILY_SCHEMA, f"catalog[{family}]")
    if raw["family"] != family:
        raise CatalogError(f"catalog file declares family {raw['family']!r}, expected {family!r}")
    entries = tuple(
        DegreeEntry(
            label=e["label"], kind=e["kind"], version=e["version"],
            constraints=tuple(Constraint(**c) for c in e["constraints"]),
            degree=_degree_from_json(e["degree"]),
            source=e["source"], multiplicity=e.get("multiplicity"))
        for e in raw["entries"])
    cat = FamilyCatalog(
        family=family, q_floor=raw["q_floor"],
        order=_degree_from_json(raw["order"]),
        a_H=raw["a_H"], b_H=raw["b_H"], c_H=raw["c_H"],
        ppart_cap=raw["ppart_cap"], top_phi=tuple(raw["top_phi"]),
        entries=entries,
        isolated_labels=tuple(raw.get("isolated_labels", ())),
        smallest=raw.get("smallest", {}),
        exceptional_pair=tuple(raw["exceptional_pair"]) if raw.get("exceptional_pair") else None,
        torus_orders=tuple(
            TorusOrder(tuple(t["indices"]), _degree_from_json(t["torus"]), t["entry_label"])
            for t in raw["torus_orders"]))
    _check_invariants(cat)
    return cat


def degrees_at(family: str, q: PrimePower | int, versions=("simple",)):
    if not isinstance(q, PrimePower):
        q = PrimePower.from_value(q)
    return load_catalog(family).degrees_at(q, versions)


def order_at(family: str, q: PrimePower | int) -> int:
    if not isinstance(q, PrimePower):
        q = PrimePower.from_value(q)
    return load_catalog(family).order_at(q)


def steinberg_degree(family: str, q: PrimePower | int) -> int:
    if not isinstance(q, PrimePower):
        q = PrimePower.from_value(q)
    return load_catalog(family).steinberg_degree(q)


@functools.cache
def table1_entries() -> tuple[Table1Entry, ...]:
    raw = json.loads(_read_data("table1.json"))
    return tuple(
        Table1Entry(r["group_pattern"], r["symbol"], tuple(r["params"]),
                    r["param_min"], r["exponent"])
        for r in raw)


def table1_ppart(pattern: str, **params: int) -> int:
    for entry in table1_entries():
        if entry.group_pattern == pattern:
            return entry.ppart_exponent(**params)
    raise KeyError(f"no p-part row for pattern {pattern!r}")


@functools.cache
def sporadic_pairs() -> tuple[SporadicPair, ...]:
    raw = json.loads(_read_data("sporadic.json"))
    _validate(raw, _SPORADIC_SCHEMA, "sporadic")
    out = []
    for row in raw:
        a, b = row["pairs"]
        out.append(SporadicPair(
            group=row["group"],
            char_labels=(a["label"], b["label"]),
            degrees=({int(p): e for p, e in a["factors"].items()},
                     {int(p): e for p, e in b["factors"].items()})))
    return tuple(out)
