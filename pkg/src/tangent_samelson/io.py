"""JSON algebra files and matrix files.

Algebra file layout::

    {"name": "so(3)", "dim": 3,
     "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "-1"}}, ...],
     "torus": [1],                       # optional: indices or coordinate lists
     "regular_element": ["1", "0", "0"]} # optional

Every scalar is a rational string ("-1", "2", "1/2").
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional

from .algebra import Element, LieAlgebra
from .errors import AlgebraError, ParseError
from .scalars import parse_rational, rational_str

FIXTURES = ("so3", "u3", "so3xso3", "u2", "r1", "r2", "gr4", "aff2")


@dataclass(frozen=True)
class AlgebraFile:
    algebra: LieAlgebra
    torus: Optional[tuple] = None
    regular_element: Optional[tuple] = None


def fixture_path(name: str) -> Path:
    """Path of a shipped fixture such as ``"so3"`` or ``"so3.json"``."""
    stem = name[:-5] if name.endswith(".json") else name
    if stem not in FIXTURES:
        raise FileNotFoundError(f"no shipped fixture named {name!r}")
    return Path(str(resources.files("tangent_samelson") / "data" / f"{stem}.json"))


def resolve_path(path) -> Path:
    """Use ``path`` if it exists, else fall back to a shipped fixture of that name."""
    p = Path(path)
    if p.exists():
        return p
    try:
        return fixture_path(p.name)
    except FileNotFoundError:
        raise ParseError(f"{path}: no such file") from None


def _rational(value, where):
    if isinstance(value, float):
        raise ParseError(f"{where}: floats are not allowed, write {value!r} as a rational string")
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _index(value, dim, where):
    if isinstance(value, str) and value.strip().isdigit():
        value = int(value)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{where}: basis index must be an integer, got {value!r}")
    if not 1 <= value <= dim:
        raise ParseError(f"{where}: basis index {value} out of range 1..{dim}")
    return value


def loads_algebra(text: str, source: str = "<string>") -> AlgebraFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{source}: top level must be an object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f"{source}: field 'dim' must be a positive integer")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError(f"{source}: field 'name' must be a string")
    entries = doc.get("brackets", [])
    if not isinstance(entries, list):
        raise ParseError(f"{source}: field 'brackets' must be a list")
    brackets = {}
    for n, entry in enumerate(entries):
        where = f"{source}: brackets[{n}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{where}: entry must be an object")
        i = _index(entry.get("i"), dim, f"{where}.i")
        j = _index(entry.get("j"), dim, f"{where}.j")
        if i >= j:
            raise ParseError(f"{where}: entries must have i < j, got ({i}, {j})")
        if (i, j) in brackets:
            raise ParseError(f"{where}: duplicate entry for ({i}, {j})")
        coeffs = entry.get("coeffs", {})
        if not isinstance(coeffs, dict):
            raise ParseError(f"{where}.coeffs: must be an object")
        brackets[(i, j)] = {
            _index(k, dim, f"{where}.coeffs key {k!r}"): _rational(v, f"{where}.coeffs[{k!r}]")
            for k, v in coeffs.items()
        }
    try:
        g = LieAlgebra(dim, brackets, name)
    except AlgebraError as exc:
        raise ParseError(f"{source}: {exc}") from None
    torus = None
    if doc.get("torus") is not None:
        torus = parse_torus(g, doc["torus"], f"{source}: torus")
    regular = None
    if doc.get("regular_element") is not None:
        reg = doc["regular_element"]
        if not isinstance(reg, list):
            raise ParseError(f"{source}: regular_element must be a list")
        regular = tuple(_rational(x, f"{source}: regular_element[{n}]") for n, x in enumerate(reg))
    return AlgebraFile(g, torus, regular)


def parse_torus(g: LieAlgebra, spec, where="torus"):
    """Torus hint as 1-based indices and/or full coordinate lists."""
    if not isinstance(spec, list) or not spec:
        raise ParseError(f"{where}: must be a nonempty list")
    out = []
    for n, item in enumerate(spec):
        if isinstance(item, list):
            if len(item) != g.dim:
                raise ParseError(f"{where}[{n}]: expected {g.dim} coordinates")
            out.append(Element(g, [_rational(x, f"{where}[{n}]") for x in item]))
        else:
            out.append(g.e(_index(item, g.dim, f"{where}[{n}]")))
    return tuple(out)


def parse_algebra(path) -> AlgebraFile:
    p = resolve_path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from None
    return loads_algebra(text, str(path))


def emit_algebra(g: LieAlgebra, torus=None, regular_element=None) -> str:
    """Serialise ``g`` (and optional hints) in the algebra file format."""
    lines = ["{", f'  "name": {json.dumps(g.name)},', f'  "dim": {g.dim},']
    entries = []
    for (i, j), coeffs in sorted(g.brackets().items()):
        c = {str(k): rational_str(v) for k, v in sorted(coeffs.items())}
        entries.append("    " + json.dumps({"i": i, "j": j, "coeffs": c}))
    tail = []
    if torus is not None:
        items = []
        for h in torus:
            support = h.support()
            if len(support) == 1 and h.coords[support[0] - 1] == 1:
                items.append(support[0])
            else:
                items.append([rational_str(c) for c in h.coords])
        tail.append(f'  "torus": {json.dumps(items)}')
    if regular_element is not None:
        tail.append(f'  "regular_element": {json.dumps([rational_str(c) for c in regular_element])}')
    if entries:
        lines.append('  "brackets": [')
        lines.append(",\n".join(entries))
        lines.append("  ]" + ("," if tail else ""))
    else:
        lines.append('  "brackets": []' + ("," if tail else ""))
    if tail:
        lines.append(",\n".join(tail))
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_matrix(text: str, source: str = "<string>"):
    """Square matrix of rational strings; also accepts a report with ``j_matrix``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if isinstance(doc, dict):
        doc = doc.get("j_matrix", doc.get("matrix"))
    if not isinstance(doc, list) or not doc or not all(isinstance(r, list) for r in doc):
        raise ParseError(f"{source}: expected a list of rows")
    n = len(doc)
    rows = []
    for r, row in enumerate(doc):
        if len(row) != n:
            raise ParseError(f"{source}: row {r + 1} has {len(row)} entries, expected {n}")
        rows.append([_rational(x, f"{source}: [{r + 1}][{c + 1}]") for c, x in enumerate(row)])
    return rows


def load_matrix(path):
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from None
    return loads_matrix(text, str(path))


def matrix_to_json(m):
    return [[rational_str(Fraction(x)) for x in row] for row in m]
