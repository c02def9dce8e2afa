"""Command line interface.

    tangent-samelson check so3.json
    tangent-samelson roots u3.json --torus 1,2,3 --regular 2,1,3
    tangent-samelson samelson so3.json --mode tangent --k 2 --format json
    tangent-samelson verify so3.json --j j.json --level 1

Exit status: 0 when every check passes, 1 on a failed check or a
construction that cannot be carried out, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import check_compact_type, check_jacobi, coords_to_json
from .errors import AlgebraError, DecompositionError, ParseError
from .io import matrix_to_json, parse_algebra, parse_torus, load_matrix
from .report import VerificationItem
from .roots import DEFAULT_TOL, find_maximal_torus, root_space_decomposition
from .scalars import parse_rational, rational_str
from .structures import (
    ComplexStructure,
    build_classic_samelson,
    lift_complex_structure,
    tower_complex_structure,
)
from .tangent import tower
from .verify import LABELS, case_suite, check_root_datum, verification_report


class _Failure(Exception):
    """Construction failed; reported as a failed check, exit status 1."""


def _seed():
    raw = os.environ.get("SAMELSON_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"SAMELSON_SEED must be an integer, got {raw!r}") from None


def _parse_torus_arg(g, text):
    text = text.strip()
    if text.startswith("["):
        try:
            spec = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"--torus: {exc.msg}") from None
    else:
        spec = [s for s in text.split(",") if s.strip()]
    return parse_torus(g, spec, "--torus")


def _parse_vector_arg(text, flag):
    try:
        return tuple(parse_rational(s) for s in text.split(",") if s.strip())
    except ValueError as exc:
        raise ParseError(f"{flag}: {exc}") from None


def _datum(args, fdata):
    g = fdata.algebra
    hint = _parse_torus_arg(g, args.torus) if args.torus else fdata.torus
    regular = _parse_vector_arg(args.regular, "--regular") if args.regular else fdata.regular_element
    try:
        torus = find_maximal_torus(g, seed=_seed(), hint=hint)
        return root_space_decomposition(g, torus, args.tol, regular=regular, seed=_seed())
    except (AlgebraError, DecompositionError) as exc:
        raise _Failure(str(exc)) from None


def _roots_json(datum):
    if datum is None:
        return []
    return [
        {"values": coords_to_json(r.values), "vector": coords_to_json(E.coords)}
        for r, E in datum.pairs()
    ]


def _document(command, g, datum=None, j=None, items=(), extra=None):
    doc = {
        "command": command,
        "name": g.name,
        "dim": g.dim,
        "roots": _roots_json(datum),
        "j_matrix": matrix_to_json(j.matrix) if j is not None else None,
        "checks": [it.to_dict() for it in items],
    }
    if datum is not None:
        doc["torus"] = [coords_to_json(h.coords) for h in datum.torus]
        doc["regular_element"] = (
            coords_to_json(datum.regular_element.coords)
            if datum.regular_element is not None else None
        )
    if extra:
        doc.update(extra)
    doc["passed"] = all(it.passed for it in items)
    return doc


def _basis_label(index, n, level):
    """Label of a 1-based basis index in T^level g (c/v suffixes)."""
    if level == 0:
        return f"e{index}"
    suffix = []
    dim = n * 2**level
    i = index
    for _ in range(level):
        dim //= 2
        if i > dim:
            suffix.append("v")
            i -= dim
        else:
            suffix.append("c")
    return f"e{i}^" + "".join(reversed(suffix))


def _format_vector(coords, n, level):
    out = ""
    for idx, c in enumerate(coords, 1):
        if not c:
            continue
        label = _basis_label(idx, n, level)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = label if mag == 1 else f"{rational_str(mag)}*{label}"
        if not out:
            out = term if sign == "+" else f"-{term}"
        else:
            out += f" {sign} {term}"
    return out or "0"


def _dumps(doc):
    """Pretty JSON with one root, matrix row or check per line."""
    compact = {"separators": (", ", ": ")}
    lines = []
    for key, value in doc.items():
        head = f"  {json.dumps(key)}: "
        if isinstance(value, list) and value and key in ("roots", "j_matrix", "checks", "torus"):
            inner = ",\n".join("    " + json.dumps(v, **compact) for v in value)
            lines.append(head + "[\n" + inner + "\n  ]")
        else:
            lines.append(head + json.dumps(value, **compact))
    return "{\n" + ",\n".join(lines) + "\n}"


def _item_line(item):
    label = LABELS.get(item.name, item.name)
    status = "PASS" if item.passed else "FAIL"
    line = f"{label}: {status}"
    if item.detail:
        line += f" ({item.detail})"
    if not item.passed and item.certificate is not None:
        line += f"\n    certificate: {json.dumps(item.certificate)}"
    return line


def _text(doc, g, datum, j, level):
    out = [f"{doc['name'] or 'algebra'} (dim {doc['dim']})"]
    if datum is not None:
        out.append("torus:")
        for i, h in enumerate(datum.torus, 1):
            out.append(f"  H_{i} = {_format_vector(h.coords, g.dim, 0)}")
        if datum.regular_element is not None:
            out.append(f"regular element H0 = {_format_vector(datum.regular_element.coords, g.dim, 0)}")
        out.append(f"positive roots ({len(datum.roots)}):")
        for r, E in datum.pairs():
            out.append(f"  alpha = {r}   E_alpha = {E!r}")
    if j is not None:
        out.append(f"J on level {level} (dim {j.dim}):")
        for col in range(1, j.dim + 1):
            image = [row[col - 1] for row in j.matrix]
            out.append(
                f"  J {_basis_label(col, g.dim, level)} = {_format_vector(image, g.dim, level)}"
            )
    for it in doc["_items"]:
        out.append(_item_line(it))
    out.append("overall: " + ("PASS" if doc["passed"] else "FAIL"))
    return "\n".join(out)


def _emit(args, doc, g, datum=None, j=None, level=0, items=()):
    if args.format == "json":
        print(_dumps(doc))
    else:
        doc = dict(doc, _items=items)
        print(_text(doc, g, datum, j, level))
    return 0 if doc["passed"] else 1


def _failure_item(message):
    return VerificationItem("construction", False, {"message": message}, message)


def cmd_check(args):
    g = parse_algebra(args.file).algebra
    items = [check_jacobi(g), check_compact_type(g)]
    return _emit(args, _document("check", g, items=items), g, items=items)


def cmd_roots(args):
    fdata = parse_algebra(args.file)
    g = fdata.algebra
    items = [check_jacobi(g), check_compact_type(g)]
    datum = None
    if all(it.passed for it in items):
        try:
            datum = _datum(args, fdata)
            items.append(check_root_datum(datum))
        except _Failure as exc:
            items.append(_failure_item(str(exc)))
    return _emit(args, _document("roots", g, datum, items=items), g, datum, items=items)


def cmd_samelson(args):
    fdata = parse_algebra(args.file)
    g = fdata.algebra
    items = [check_jacobi(g), check_compact_type(g)]
    datum = j = None
    level = 0
    if all(it.passed for it in items):
        try:
            datum = _datum(args, fdata)
            items.append(check_root_datum(datum))
            if args.mode == "tangent":
                level = args.k
                j = tower_complex_structure(g, datum, args.k)
            elif args.mode == "classic":
                j = build_classic_samelson(g, datum)
            else:
                level = args.k
                j = build_classic_samelson(g, datum)
                for tg in tower(g, args.k):
                    j = lift_complex_structure(tg, j)
        except (AlgebraError, DecompositionError, _Failure) as exc:
            items.append(_failure_item(str(exc)))
    if j is not None:
        items += list(verification_report(j).items)
        if args.cases and args.mode == "tangent" and args.k == 1:
            items += case_suite(j.tangent, datum, j)
    extra = {"mode": args.mode, "level": level}
    doc = _document("samelson", g, datum, j, items, extra)
    return _emit(args, doc, g, datum, j, level, items)


def cmd_verify(args):
    g = parse_algebra(args.file).algebra
    m = load_matrix(args.j)
    items = [check_jacobi(g)]
    target = g
    if args.level:
        try:
            target = tower(g, args.level)[-1].total
        except AlgebraError as exc:
            items.append(_failure_item(str(exc)))
    j = None
    if all(it.passed for it in items):
        if len(m) != target.dim:
            raise ParseError(
                f"{args.j}: matrix is {len(m)}x{len(m)}, level {args.level} algebra has dim {target.dim}"
            )
        j = ComplexStructure(target, m)
        items += list(verification_report(j).items)
    doc = _document("verify", g, None, j, items, {"level": args.level})
    return _emit(args, doc, g, None, j, args.level, items)


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    torus = argparse.ArgumentParser(add_help=False)
    torus.add_argument(
        "--torus",
        help="torus basis: comma-separated basis indices (e.g. 1,2,3) or a JSON "
        "list of indices/coordinate vectors",
    )
    torus.add_argument(
        "--regular",
        help="regular element H0: comma-separated coefficients over the torus "
        "basis, or full coordinates",
    )
    torus.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)

    parser = argparse.ArgumentParser(
        prog="tangent-samelson",
        description="Exact Samelson-type complex structures on tangent Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="Jacobi identity and compact type")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("roots", parents=[common, torus], help="root space decomposition")
    p.add_argument("file")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("samelson", parents=[common, torus], help="build and verify J")
    p.add_argument("file")
    p.add_argument("--k", type=_positive_int, default=1, help="tangent tower level")
    p.add_argument("--mode", choices=("tangent", "classic", "lift"), default="tangent")
    p.add_argument("--cases", action="store_true", help="add the per-case-family Nijenhuis checks")
    p.set_defaults(func=cmd_samelson)

    p = sub.add_parser("verify", parents=[common], help="verify a user-supplied J")
    p.add_argument("file")
    p.add_argument("--j", required=True, help="JSON matrix file (rows of rational strings)")
    p.add_argument("--level", type=_nonneg_int, default=0,
                   help="J acts on the level-L tangent algebra (0 = the algebra itself)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
