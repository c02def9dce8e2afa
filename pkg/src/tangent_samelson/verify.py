"""Exact integrability checks: J^2, the Nijenhuis tensor, root data."""

from __future__ import annotations

import itertools
from typing import Optional

from .algebra import Element, bracket, check_compact_type, check_jacobi, coords_to_json
from .errors import AlgebraError
from .report import VerificationItem, VerificationReport
from .roots import RootDatum, root_residuals, torus_coefficients
from .structures import ComplexStructure
from .tangent import TangentAlgebra

LABELS = {
    "jacobi": "Jacobi identity",
    "compact_type": "compact type",
    "root_exactness": "root decomposition exact",
    "j_squared": "J^2 = -id",
    "nijenhuis": "N_J = 0",
}


def nijenhuis(j: ComplexStructure, x: Element, y: Element) -> Element:
    """``J[Jx, y] + J[x, Jy] + [x, y] - [Jx, Jy]``."""
    for z in (x, y):
        if not (z.algebra is j.algebra or z.algebra == j.algebra):
            raise AlgebraError("element is not in the algebra J acts on")
    if x.is_complex != y.is_complex:
        x, y = x.complexify(), y.complexify()
    jx, jy = j(x), j(y)
    return j(bracket(jx, y) + bracket(x, jy)) + bracket(x, y) - bracket(jx, jy)


def verify_j_squared(j: ComplexStructure) -> VerificationItem:
    sq = j.squared()
    n = j.dim
    for col in range(n):
        residual = [sq[r][col] + (1 if r == col else 0) for r in range(n)]
        if any(residual):
            return VerificationItem(
                "j_squared",
                False,
                {"column": col + 1, "residual": coords_to_json(residual)},
                f"(J^2 + id) e_{col + 1} != 0",
            )
    return VerificationItem("j_squared", True, None, f"{n}x{n} exact")


def verify_integrability(j: ComplexStructure) -> VerificationItem:
    """Scan every unordered pair of basis vectors; witness = first failing pair."""
    g = j.algebra
    basis = g.basis()
    images = [j(e) for e in basis]
    pairs = list(itertools.combinations(range(g.dim), 2))
    for a, b in pairs:
        ea, eb, ja, jb = basis[a], basis[b], images[a], images[b]
        res = j(bracket(ja, eb) + bracket(ea, jb)) + bracket(ea, eb) - bracket(ja, jb)
        if not res.is_zero():
            return VerificationItem(
                "nijenhuis",
                False,
                {"pair": [a + 1, b + 1], "residual": coords_to_json(res.coords)},
                f"N_J(e_{a + 1}, e_{b + 1}) != 0",
            )
    return VerificationItem("nijenhuis", True, None, f"{len(pairs)}/{len(pairs)} pairs")


def check_root_datum(datum: RootDatum) -> VerificationItem:
    """Exact eigen-equations, dimension count, sign split and closure."""
    n = datum.algebra.dim

    def fail(cert, detail):
        return VerificationItem("root_exactness", False, cert, detail)

    for (a, i), res in root_residuals(datum):
        return fail(
            {"root": a + 1, "torus_index": i + 1, "residual": coords_to_json(res)},
            f"ad(H_{i + 1}) E != alpha(H_{i + 1}) E for root #{a + 1}",
        )
    if datum.rank + 2 * len(datum.roots) != n:
        return fail(
            {"rank": datum.rank, "positive_roots": len(datum.roots), "dim": n},
            "dimension count rank + 2|positive roots| != dim",
        )
    for r in datum.roots:
        if any(v.re != 0 for v in r.values):
            return fail({"root": str(r)}, "root value with nonzero real part")
    if datum.regular_element is not None and datum.roots:
        p = torus_coefficients(datum.torus, datum.regular_element)
        for r in datum.roots:
            if r(p).im <= 0:
                return fail({"root": str(r)}, "positive root with Im alpha(H0) <= 0")
    values = {r.values for r in datum.roots}
    allvalues = values | {tuple(-v for v in r.values) for r in datum.roots}
    for r, s in itertools.product(datum.roots, repeat=2):
        total = tuple(x + y for x, y in zip(r.values, s.values))
        if total in allvalues and total not in values:
            return fail({"roots": [str(r), str(s)]}, "positive system not closed under addition")
    return VerificationItem(
        "root_exactness", True, None,
        f"rank {datum.rank}, {len(datum.roots)} positive roots, zero residual",
    )


FAMILY_DESCRIPTIONS = {
    1: "H^c vs E_+^c",
    2: "H^c vs E_-^c",
    3: "H^c vs E_+^v",
    4: "H^c vs E_-^v",
    5: "H^v vs E_+^c",
    6: "H^v vs E_-^c",
    7: "H^v vs E_+^v",
    8: "H^v vs E_-^v",
    9: "E_+^c vs E_+^(c|v)",
    10: "E^v vs E^v",
    11: "E_+ vs E_- (not both v)",
    12: "E_-^c vs E_-^(c|v)",
    13: "torus vs torus",
}

_H_FAMILY = {
    ("c", "c", 1): 1, ("c", "c", -1): 2, ("c", "v", 1): 3, ("c", "v", -1): 4,
    ("v", "c", 1): 5, ("v", "c", -1): 6, ("v", "v", 1): 7, ("v", "v", -1): 8,
}


def _family(a, b):
    """Case family of an unordered pair of tagged basis vectors."""
    for A, B in ((a, b), (b, a)):
        kind_a, lift_a, sign_a = A
        kind_b, lift_b, sign_b = B
        if kind_a == "H" and kind_b == "H":
            return 13
        if kind_a == "H" and kind_b == "E":
            return _H_FAMILY[(lift_a, lift_b, sign_b)]
        if kind_a == "E" and kind_b == "E":
            if lift_a == "v" and lift_b == "v":
                return 10
            if sign_a == 1 and sign_b == 1 and lift_a == "c":
                return 9
            if sign_a == 1 and sign_b == -1:
                return 11
            if sign_a == -1 and sign_b == -1 and lift_a == "c":
                return 12
    return 14


def complex_basis(tg: TangentAlgebra, datum: RootDatum):
    """Lifted eigenbasis of the complexified tangent algebra.

    Returns ``[(label, tag, element)]`` with ``tag = (kind, lift, sign)``.
    """
    out = []
    for i, h in enumerate(datum.torus, 1):
        hc = h.complexify()
        out.append((f"H_{i}^c", ("H", "c", 0), tg.complete_lift(hc)))
        out.append((f"H_{i}^v", ("H", "v", 0), tg.vertical_lift(hc)))
    for a, E in enumerate(datum.root_vectors, 1):
        for sign, vec in ((1, E), (-1, E.conjugate())):
            s = "+" if sign > 0 else "-"
            out.append((f"E_{s}{a}^c", ("E", "c", sign), tg.complete_lift(vec)))
            out.append((f"E_{s}{a}^v", ("E", "v", sign), tg.vertical_lift(vec)))
    return out


def case_suite(tg: TangentAlgebra, datum: RootDatum, j: ComplexStructure):
    """Nijenhuis tensor on the lifted eigenbasis, one item per case family."""
    if not (j.algebra is tg.total or j.algebra == tg.total):
        raise AlgebraError("J does not act on this tangent algebra")
    basis = complex_basis(tg, datum)
    counts = {f: 0 for f in range(1, 15)}
    failures = {}
    for (la, ta, A), (lb, tb, B) in itertools.combinations(basis, 2):
        fam = _family(ta, tb)
        counts[fam] += 1
        if fam in failures:
            continue
        res = nijenhuis(j, A, B)
        if not res.is_zero():
            failures[fam] = {"pair": [la, lb], "residual": coords_to_json(res.coords)}
    items = []
    for fam in range(1, 14):
        detail = f"{FAMILY_DESCRIPTIONS[fam]}: "
        detail += f"{counts[fam]} pairs" if counts[fam] else "0 pairs (vacuous)"
        items.append(VerificationItem(f"case_{fam}", fam not in failures, failures.get(fam), detail))
    if counts[14]:
        items.append(VerificationItem("case_unclassified", 14 not in failures, failures.get(14),
                                      f"{counts[14]} pairs"))
    return items


def verification_report(
    j: Optional[ComplexStructure] = None,
    base=None,
    datum: Optional[RootDatum] = None,
    compact: bool = True,
) -> VerificationReport:
    """Standard report: jacobi, compact_type, root_exactness, j_squared, nijenhuis.

    Items whose inputs are not supplied are omitted.
    """
    items = []
    if base is not None:
        items.append(check_jacobi(base))
        if compact:
            items.append(check_compact_type(base))
    if datum is not None:
        items.append(check_root_datum(datum))
    if j is not None:
        items.append(verify_j_squared(j))
        items.append(verify_integrability(j))
    return VerificationReport(tuple(items))
