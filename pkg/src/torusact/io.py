"""JSON action files and the bundled example corpus.

An action file holds a name, n, d, integer generators and optional ``field``
and ``expectations`` blocks. Polynomials are ascending coefficient lists and
rationals are written as [num, den] pairs (integers may be written bare).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .action import ZdAction, new_action
from .numberfield import LatticeBasis, NFElement, NumberField, construct_action


class ParseError(ValueError):
    pass


def parse_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, list) and len(x) == 2 and all(isinstance(t, int) for t in x):
        if x[1] == 0:
            raise ParseError("zero denominator")
        return Fraction(x[0], x[1])
    raise ParseError(f"not a rational: {x!r}")


def dump_rational(q):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else [q.numerator, q.denominator]


@dataclass
class FieldBlock:
    min_poly: tuple
    units: list                      # coefficient vectors (Fractions)
    lattices: dict                   # name -> list of coefficient vectors
    lattice: str | None = None       # the lattice the stored generators use

    @property
    def field(self) -> NumberField:
        return NumberField(self.min_poly)

    def unit_elements(self, k: NumberField | None = None) -> list:
        k = k or self.field
        return [k.element(u) for u in self.units]

    def lattice_basis(self, name: str, k: NumberField | None = None) -> LatticeBasis:
        if name not in self.lattices:
            raise KeyError(f"unknown lattice {name!r}; have {sorted(self.lattices)}")
        k = k or self.field
        return LatticeBasis(k, self.lattices[name])

    def construct(self, name: str) -> ZdAction:
        k = self.field
        return construct_action(k, self.unit_elements(k), self.lattice_basis(name, k))


@dataclass
class ActionFile:
    name: str
    generators: list
    field: FieldBlock | None = None
    expectations: dict = dc_field(default_factory=dict)
    printed: list | None = None      # generators as printed in the source, when they differ
    notes: str = ""

    @property
    def n(self) -> int:
        return len(self.generators[0])

    @property
    def d(self) -> int:
        return len(self.generators)

    def action(self) -> ZdAction:
        return new_action(self.generators)


def _int_matrix(m, where: str):
    if not (isinstance(m, list) and m and all(isinstance(r, list) for r in m)):
        raise ParseError(f"{where}: expected a list of rows")
    for r in m:
        if len(r) != len(m) or not all(isinstance(v, int) and not isinstance(v, bool) for v in r):
            raise ParseError(f"{where}: expected a square integer matrix")
    return tuple(tuple(r) for r in m)


def from_dict(data: dict) -> ActionFile:
    try:
        name = data["name"]
        gens = [_int_matrix(g, f"generator {i}") for i, g in enumerate(data["generators"])]
    except KeyError as e:
        raise ParseError(f"missing key {e}") from None
    if not gens:
        raise ParseError("at least one generator is required")
    if "n" in data and data["n"] != len(gens[0]):
        raise ParseError(f"n = {data['n']} but generators are {len(gens[0])}x{len(gens[0])}")
    if "d" in data and data["d"] != len(gens):
        raise ParseError(f"d = {data['d']} but {len(gens)} generators given")
    fb = None
    if data.get("field") is not None:
        f = data["field"]
        fb = FieldBlock(
            min_poly=tuple(f["min_poly"]),
            units=[tuple(parse_rational(c) for c in u) for u in f.get("units", [])],
            lattices={k: [tuple(parse_rational(c) for c in row) for row in v]
                      for k, v in f.get("lattices", {}).items()},
            lattice=f.get("lattice"))
    printed = data.get("printed")
    if printed is not None:
        printed = [_int_matrix(g, f"printed {i}") for i, g in enumerate(printed)]
    return ActionFile(name, gens, fb, dict(data.get("expectations", {})), printed,
                      data.get("notes", ""))


def to_dict(af: ActionFile) -> dict:
    out = {"name": af.name, "n": af.n, "d": af.d,
           "generators": [[list(r) for r in g] for g in af.generators]}
    if af.field is not None:
        f = af.field
        blk = {"min_poly": list(f.min_poly),
               "units": [[dump_rational(c) for c in u] for u in f.units],
               "lattices": {k: [[dump_rational(c) for c in row] for row in v]
                            for k, v in sorted(f.lattices.items())}}
        if f.lattice is not None:
            blk["lattice"] = f.lattice
        out["field"] = blk
    if af.printed is not None:
        out["printed"] = [[list(r) for r in g] for g in af.printed]
    if af.expectations:
        out["expectations"] = dict(sorted(af.expectations.items()))
    if af.notes:
        out["notes"] = af.notes
    return out


def loads(text: str) -> ActionFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    return from_dict(data)


def _flat(x) -> bool:
    # scalars, [num, den] pairs and rows of those stay on one line
    if not isinstance(x, list):
        return not isinstance(x, dict)
    return all(not isinstance(t, (list, dict)) or
               (isinstance(t, list) and all(not isinstance(u, (list, dict)) for u in t))
               for t in x)


def format_json(obj, indent: int = 0) -> str:
    """Deterministic JSON with matrix rows kept on a single line."""
    pad = "  " * (indent + 1)
    if _flat(obj):
        return json.dumps(obj, separators=(", ", ": "))
    if isinstance(obj, dict):
        items = [f"{pad}{json.dumps(k)}: {format_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    items = [pad + format_json(v, indent + 1) for v in obj]
    return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"


def dumps(af: ActionFile) -> str:
    return format_json(to_dict(af)) + "\n"


def load(path) -> ActionFile:
    return loads(Path(path).read_text())


def save(af: ActionFile, path) -> None:
    Path(path).write_text(dumps(af))


def action_file_from(name: str, a: ZdAction, **kw) -> ActionFile:
    return ActionFile(name, [tuple(tuple(r) for r in g) for g in a.generators], **kw)


# --- bundled corpus -------------------------------------------------------------------

def _corpus_dir():
    return resources.files("torusact") / "corpus"


def corpus_manifest() -> dict:
    return json.loads((_corpus_dir() / "manifest.json").read_text())


def corpus_path(name: str):
    return _corpus_dir() / f"{name}.json"


def load_corpus_entry(name: str) -> ActionFile:
    return loads(corpus_path(name).read_text())


def load_corpus() -> dict:
    """All bundled entries, keyed by name, in manifest order."""
    return {name: load_corpus_entry(name) for name in corpus_manifest()["entries"]}
