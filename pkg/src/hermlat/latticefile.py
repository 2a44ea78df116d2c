"""JSON lattice files with exact num/den entries.

A Hermitian file::

    {"kind": "hermitian", "d": -1, "rank": 1, "name": "L",
     "gram": [[{"a_num": -1, "a_den": 1, "b_num": 0, "b_den": 1}]]}

A quadratic file uses the same layout without ``d`` and without the ``b``
fields.  A bare JSON integer is accepted wherever an entry record is.
Decimal numbers are rejected outright.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .exact import FieldElement
from .hermitian import HermitianLattice
from .quadratic import QuadraticLattice, lattice


class LatticeFileError(ValueError):
    pass


def _no_floats(text: str):
    raise LatticeFileError(f"decimal number {text!r} not allowed; use num/den integers")


def loads_json(text: str) -> Any:
    try:
        return json.loads(text, parse_float=_no_floats)
    except json.JSONDecodeError as exc:
        raise LatticeFileError(f"invalid JSON: {exc}") from None


def _int(obj: Any, where: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise LatticeFileError(f"{where}: expected an integer, got {obj!r}")
    return obj


def _ratio(rec: dict, num: str, den: str, where: str) -> Fraction:
    n = _int(rec.get(num, 0), f"{where}.{num}")
    dd = _int(rec.get(den, 1), f"{where}.{den}")
    if dd == 0:
        raise LatticeFileError(f"{where}.{den}: zero denominator")
    return Fraction(n, dd)


def parse_rational(obj: Any, where: str) -> Fraction:
    if isinstance(obj, dict):
        extra = set(obj) - {"a_num", "a_den"}
        if extra:
            raise LatticeFileError(f"{where}: unexpected keys {sorted(extra)}")
        return _ratio(obj, "a_num", "a_den", where)
    return Fraction(_int(obj, where))


def parse_field_element(obj: Any, d: int, where: str) -> FieldElement:
    if isinstance(obj, dict):
        extra = set(obj) - {"a_num", "a_den", "b_num", "b_den"}
        if extra:
            raise LatticeFileError(f"{where}: unexpected keys {sorted(extra)}")
        return FieldElement(_ratio(obj, "a_num", "a_den", where),
                            _ratio(obj, "b_num", "b_den", where), d)
    return FieldElement.rational(_int(obj, where), d)


def _matrix(data: dict, rank: int | None, parse) -> list[list]:
    gram = data.get("gram")
    if not isinstance(gram, list):
        raise LatticeFileError("gram: expected a list of rows")
    n = len(gram)
    if rank is not None and rank != n:
        raise LatticeFileError(f"rank: declared {rank} but gram has {n} rows")
    rows = []
    for i, row in enumerate(gram):
        if not isinstance(row, list) or len(row) != n:
            raise LatticeFileError(f"gram[{i}]: expected a row of length {n}")
        rows.append([parse(x, f"gram[{i}][{j}]") for j, x in enumerate(row)])
    return rows


@dataclass(frozen=True)
class LatticeFile:
    kind: str
    lattice: HermitianLattice | QuadraticLattice


def parse_lattice(data: Any) -> LatticeFile:
    if not isinstance(data, dict):
        raise LatticeFileError("top level: expected an object")
    kind = data.get("kind")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise LatticeFileError("name: expected a string")
    rank = data.get("rank")
    if rank is not None:
        rank = _int(rank, "rank")
    try:
        if kind == "hermitian":
            d = _int(data.get("d"), "d")
            rows = _matrix(data, rank, lambda x, w: parse_field_element(x, d, w))
            return LatticeFile(kind, HermitianLattice(d, tuple(map(tuple, rows)), name))
        if kind == "quadratic":
            rows = _matrix(data, rank, parse_rational)
            return LatticeFile(kind, lattice(rows, name))
    except LatticeFileError:
        raise
    except ValueError as exc:
        raise LatticeFileError(f"gram: {exc}") from None
    raise LatticeFileError(f"kind: expected 'hermitian' or 'quadratic', got {kind!r}")


def load_lattice(path: str | Path) -> LatticeFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise LatticeFileError(f"{path}: {exc.strerror}") from None
    try:
        return parse_lattice(loads_json(text))
    except LatticeFileError as exc:
        raise LatticeFileError(f"{path}: {exc}") from None


def _rational_record(x: Fraction) -> dict:
    return {"a_num": x.numerator, "a_den": x.denominator}


def _field_record(x: FieldElement) -> dict:
    return {"a_num": x.a.numerator, "a_den": x.a.denominator,
            "b_num": x.b.numerator, "b_den": x.b.denominator}


def lattice_to_dict(L: HermitianLattice | QuadraticLattice) -> dict:
    if isinstance(L, HermitianLattice):
        out = {"kind": "hermitian", "d": L.d, "rank": L.rank}
        gram = [[_field_record(x) for x in row] for row in L.gram]
    else:
        out = {"kind": "quadratic", "rank": L.rank}
        gram = [[_rational_record(Fraction(x)) for x in row] for row in L.gram]
    if L.name:
        out["name"] = L.name
    out["gram"] = gram
    return out


def dumps_lattice(L: HermitianLattice | QuadraticLattice) -> str:
    """Stable serialisation: one Gram row per line."""
    d = lattice_to_dict(L)
    rows = d.pop("gram")
    head = json.dumps(d, sort_keys=False)[:-1]
    body = ",\n".join("    " + json.dumps(r) for r in rows)
    return f'{head}, "gram": [\n{body}\n]}}\n'


def parse_int_vectors(data: Any, key: str = "basis") -> list[list[int]]:
    vecs = data.get(key) if isinstance(data, dict) else data
    if not isinstance(vecs, list):
        raise LatticeFileError(f"{key}: expected a list of integer vectors")
    out = []
    for i, v in enumerate(vecs):
        if not isinstance(v, list):
            raise LatticeFileError(f"{key}[{i}]: expected a list")
        out.append([_int(x, f"{key}[{i}][{j}]") for j, x in enumerate(v)])
    return out
