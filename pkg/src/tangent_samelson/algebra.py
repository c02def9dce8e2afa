"""Lie algebras given by exact structure constants.

Basis labels are 1-based in every public entry point (``g.e(1)`` is the
first basis vector, ``structure_constant(1, 2, 3)`` is the coefficient of
e_3 in [e_1, e_2]); coordinate tuples are ordinary 0-based sequences.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from . import linalg
from .errors import AlgebraError
from .report import VerificationItem
from .scalars import GaussianRational, rational_str

ZERO = Fraction(0)


class LieAlgebra:
    """Finite-dimensional real Lie algebra with rational structure constants.

    ``brackets`` maps 1-based pairs ``(i, j)`` to ``{k: coefficient}``
    meaning ``[e_i, e_j] = sum_k coefficient * e_k``. Only one of ``(i, j)``
    and ``(j, i)`` needs to be supplied; the other is filled in by
    antisymmetry. Jacobi is not assumed (see :func:`check_jacobi`).
    """

    __slots__ = ("dim", "name", "_table", "_hash")

    def __init__(self, dim: int, brackets: Mapping = None, name: str = ""):
        if not isinstance(dim, int) or dim < 1:
            raise AlgebraError(f"dimension must be a positive integer, got {dim!r}")
        table = [[{} for _ in range(dim)] for _ in range(dim)]
        seen = {}
        for (i, j), coeffs in (brackets or {}).items():
            for idx in (i, j):
                if not 1 <= idx <= dim:
                    raise AlgebraError(f"basis index {idx} out of range 1..{dim}")
            clean = {}
            for k, v in coeffs.items():
                if not 1 <= k <= dim:
                    raise AlgebraError(f"basis index {k} out of range 1..{dim}")
                v = Fraction(v)
                if v:
                    clean[k - 1] = v
            if i == j:
                if clean:
                    raise AlgebraError(f"[e_{i}, e_{i}] must vanish")
                continue
            key = (min(i, j), max(i, j))
            oriented = clean if i < j else {k: -v for k, v in clean.items()}
            if key in seen and seen[key] != oriented:
                raise AlgebraError(f"conflicting entries for [e_{key[0]}, e_{key[1]}]")
            seen[key] = oriented
        for (i, j), coeffs in seen.items():
            table[i - 1][j - 1] = coeffs
            table[j - 1][i - 1] = {k: -v for k, v in coeffs.items()}
        self.dim = dim
        self.name = name
        self._table = tuple(
            tuple(tuple(sorted(cell.items())) for cell in row) for row in table
        )
        self._hash = None

    @classmethod
    def from_table(cls, dim, table0, name=""):
        """Build from a 0-based ``{(i, j): {k: c}}`` table (i < j entries suffice)."""
        brackets = {
            (i + 1, j + 1): {k + 1: c for k, c in coeffs.items()}
            for (i, j), coeffs in table0.items()
        }
        return cls(dim, brackets, name)

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        for kk, c in self._table[i - 1][j - 1]:
            if kk == k - 1:
                return c
        return ZERO

    def brackets(self):
        """Nonzero brackets ``{(i, j): {k: c}}`` with 1-based ``i < j``."""
        out = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                cell = self._table[i][j]
                if cell:
                    out[(i + 1, j + 1)] = {k + 1: c for k, c in cell}
        return out

    def basis_bracket(self, i0: int, j0: int):
        """0-based sparse ``[e_i, e_j]`` as a tuple of ``(k, c)``."""
        return self._table[i0][j0]

    def e(self, i: int) -> "Element":
        if not 1 <= i <= self.dim:
            raise AlgebraError(f"basis index {i} out of range 1..{self.dim}")
        coords = [ZERO] * self.dim
        coords[i - 1] = Fraction(1)
        return Element(self, coords)

    basis_element = e

    def basis(self):
        return [self.e(i) for i in range(1, self.dim + 1)]

    def element(self, coords) -> "Element":
        return Element(self, coords)

    def zero(self, complex_=False) -> "Element":
        z = GaussianRational(0) if complex_ else ZERO
        return Element(self, [z] * self.dim, complex_)

    def is_abelian(self) -> bool:
        return not any(cell for row in self._table for cell in row)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._table == other._table

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self._table))
        return self._hash

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<LieAlgebra{label} dim={self.dim}>"


class Element:
    """Vector in a Lie algebra or in its complexification.

    Real elements carry Fraction coordinates; complex ones carry
    GaussianRationals and ``is_complex`` is True.
    """

    __slots__ = ("algebra", "coords", "is_complex")

    def __init__(self, algebra: LieAlgebra, coords: Iterable, complex_: Optional[bool] = None):
        coords = list(coords)
        if len(coords) != algebra.dim:
            raise AlgebraError(
                f"expected {algebra.dim} coordinates, got {len(coords)}"
            )
        if complex_ is None:
            complex_ = any(isinstance(c, GaussianRational) for c in coords)
        if complex_:
            coords = tuple(GaussianRational.coerce(c) for c in coords)
        else:
            if any(isinstance(c, GaussianRational) for c in coords):
                raise AlgebraError("complex coordinates in a real element")
            coords = tuple(Fraction(c) for c in coords)
        self.algebra = algebra
        self.coords = coords
        self.is_complex = complex_

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {type(other).__name__}")
        if not (self.algebra is other.algebra or self.algebra == other.algebra):
            raise AlgebraError("elements belong to different algebras")

    def _combine(self, other, sign):
        self._check(other)
        complex_ = self.is_complex or other.is_complex
        if sign > 0:
            coords = [a + b for a, b in zip(self.coords, other.coords)]
        else:
            coords = [a - b for a, b in zip(self.coords, other.coords)]
        return Element(self.algebra, coords, complex_)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Element(self.algebra, [-c for c in self.coords], self.is_complex)

    def __mul__(self, scalar):
        if isinstance(scalar, Element):
            return NotImplemented
        complex_ = self.is_complex or isinstance(scalar, GaussianRational)
        return Element(self.algebra, [scalar * c for c in self.coords], complex_)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        complex_ = self.is_complex or isinstance(scalar, GaussianRational)
        return Element(self.algebra, [c / scalar for c in self.coords], complex_)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if not (self.algebra is other.algebra or self.algebra == other.algebra):
            return False
        return all(a == b for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        return hash(tuple(self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def complexify(self) -> "Element":
        return Element(self.algebra, self.coords, True)

    def conjugate(self) -> "Element":
        if not self.is_complex:
            return self
        return Element(self.algebra, [c.conjugate() for c in self.coords], True)

    @property
    def real(self) -> "Element":
        if not self.is_complex:
            return self
        return Element(self.algebra, [c.re for c in self.coords], False)

    @property
    def imag(self) -> "Element":
        if not self.is_complex:
            return self.algebra.zero()
        return Element(self.algebra, [c.im for c in self.coords], False)

    def support(self):
        """1-based indices of nonzero coordinates."""
        return [i + 1 for i, c in enumerate(self.coords) if c]

    def __repr__(self):
        out = ""
        for i, c in enumerate(self.coords):
            if not c:
                continue
            label = f"e{i + 1}"
            if isinstance(c, GaussianRational) and c.re and c.im:
                term, sign = f"({c})*{label}", "+"
            else:
                real = c.re if isinstance(c, GaussianRational) else c
                unit = "i*" if isinstance(c, GaussianRational) and c.im else ""
                mag = abs(real if real else c.im)
                sign = "-" if (real if real else c.im) < 0 else "+"
                coeff = "" if mag == 1 else f"{rational_str(mag)}*"
                term = f"{coeff}{unit}{label}"
            if not out:
                out = term if sign == "+" else f"-{term}"
            else:
                out += f" {sign} {term}"
        return out or "0"


def coords_to_json(coords):
    out = []
    for c in coords:
        if isinstance(c, GaussianRational):
            out.append({"re": rational_str(c.re), "im": rational_str(c.im)})
        else:
            out.append(rational_str(c))
    return out


def bracket(x: Element, y: Element) -> Element:
    x._check(y)
    if x.is_complex != y.is_complex:
        raise AlgebraError("bracket of a real and a complex element; complexify first")
    g = x.algebra
    acc = [ZERO] * g.dim
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        row = g._table[i]
        for j, yj in enumerate(y.coords):
            if not yj:
                continue
            cell = row[j]
            if cell:
                s = xi * yj
                for k, c in cell:
                    acc[k] = acc[k] + s * c
    return Element(g, acc, x.is_complex)


def ad_matrix(h: Element):
    """Matrix of ``ad_h``; column j holds the coordinates of [h, e_j]."""
    g = h.algebra
    n = g.dim
    z = GaussianRational(0) if h.is_complex else ZERO
    m = [[z] * n for _ in range(n)]
    for i, hi in enumerate(h.coords):
        if not hi:
            continue
        row = g._table[i]
        for j in range(n):
            for k, c in row[j]:
                m[k][j] = m[k][j] + hi * c
    return m


def killing_matrix(g: LieAlgebra):
    """Gram matrix ``B[i][j] = tr(ad_{e_i} ad_{e_j})``."""
    ads = [ad_matrix(e) for e in g.basis()]
    n = g.dim
    # tr(AB) = sum_{p,q} A[p][q] * B[q][p]
    flat = [[(p, q, a[p][q]) for p in range(n) for q in range(n) if a[p][q]] for a in ads]
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            b = ads[j]
            s = ZERO
            for p, q, v in flat[i]:
                w = b[q][p]
                if w:
                    s += v * w
            out[i][j] = out[j][i] = s
    return out


def killing_form(x: Element, y: Element) -> Fraction:
    x._check(y)
    if x.is_complex or y.is_complex:
        raise AlgebraError("killing_form expects real elements")
    a, b = ad_matrix(x), ad_matrix(y)
    n = x.algebra.dim
    return sum((a[p][q] * b[q][p] for p in range(n) for q in range(n)), ZERO)


def check_jacobi(g: LieAlgebra) -> VerificationItem:
    basis = g.basis()
    n = g.dim
    brackets = {}
    for i in range(n):
        for j in range(n):
            if g._table[i][j]:
                brackets[(i, j)] = Element(
                    g, _dense(g._table[i][j], n), False
                )
    checked = 0
    for i, j, k in itertools.combinations(range(n), 3):
        checked += 1
        total = [ZERO] * n
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = brackets.get((a, b))
            if inner is None:
                continue
            term = bracket(inner, basis[c])
            total = [s + t for s, t in zip(total, term.coords)]
        if any(total):
            return VerificationItem(
                "jacobi",
                False,
                {"triple": [i + 1, j + 1, k + 1], "residual": coords_to_json(total)},
                f"Jacobi fails on (e_{i + 1}, e_{j + 1}, e_{k + 1})",
            )
    return VerificationItem("jacobi", True, None, f"{checked}/{checked} triples")


def _dense(cell, n):
    v = [ZERO] * n
    for k, c in cell:
        v[k] = c
    return v


def centralizer(g: LieAlgebra, S: Sequence[Element]):
    """Exact basis of ``{x : [x, s] = 0 for all s in S}``."""
    rows = []
    for s in S:
        if s.algebra != g:
            raise AlgebraError("element does not belong to this algebra")
        if s.is_complex:
            raise AlgebraError("centralizer expects real elements")
        # [x, s] = -ad_s x
        rows.extend(ad_matrix(s))
    rows = [r for r in rows if any(r)]
    return [Element(g, v) for v in linalg.nullspace(rows, g.dim)]


def center(g: LieAlgebra):
    return centralizer(g, g.basis())


def is_abelian_set(elements: Sequence[Element]) -> bool:
    return all(
        bracket(a, b).is_zero() for a, b in itertools.combinations(elements, 2)
    )


def _positive_witness(B, n):
    """Lagrange diagonalisation of the symmetric form B.

    Returns ``(witness, radical_dim)`` where ``witness`` is a coordinate
    vector with B(v, v) > 0 (or None when B is negative semidefinite).
    """

    def form(u, v):
        Bv = linalg.matvec(B, v)
        return sum((a * b for a, b in zip(u, Bv) if a and b), ZERO)

    vecs = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    radical = 0
    while vecs:
        diag = [form(v, v) for v in vecs]
        for v, d in zip(vecs, diag):
            if d > 0:
                return v, None
        piv = next((i for i, d in enumerate(diag) if d < 0), None)
        if piv is None:
            for a, b in itertools.combinations(range(len(vecs)), 2):
                c = form(vecs[a], vecs[b])
                if c:
                    sign = 1 if c > 0 else -1
                    return [x + sign * y for x, y in zip(vecs[a], vecs[b])], None
            radical += len(vecs)
            break
        p = vecs.pop(piv)
        dp = diag[piv]
        vecs = [
            [x - (form(v, p) / dp) * y for x, y in zip(v, p)] for v in vecs
        ]
    return None, radical


def check_compact_type(g: LieAlgebra) -> VerificationItem:
    """Killing form negative semidefinite with radical equal to the center."""
    n = g.dim
    B = killing_matrix(g)
    witness, _ = _positive_witness(B, n)
    if witness is not None:
        value = sum(
            (a * b for a, b in zip(witness, linalg.matvec(B, witness))), ZERO
        )
        return VerificationItem(
            "compact_type",
            False,
            {"reason": "killing_form_positive", "vector": coords_to_json(witness),
             "value": rational_str(value)},
            "Killing form takes a positive value",
        )
    radical = linalg.nullspace([r for r in B if any(r)], n)
    z = [e.coords for e in center(g)]
    for v in radical:
        if not linalg.in_span(z, v):
            return VerificationItem(
                "compact_type",
                False,
                {"reason": "radical_not_central", "vector": coords_to_json(v)},
                "Killing radical is larger than the center",
            )
    return VerificationItem(
        "compact_type",
        True,
        None,
        f"Killing form negative semidefinite, center dim {len(z)}",
    )


def change_basis(g: LieAlgebra, columns: Sequence[Sequence], name: str = "") -> LieAlgebra:
    """Same algebra written in the basis ``f_j = sum_i columns[j][i] e_i``."""
    n = g.dim
    P = linalg.transpose([list(map(Fraction, c)) for c in columns])
    try:
        Pinv = linalg.inverse(P)
    except ZeroDivisionError:
        raise AlgebraError("new basis is linearly dependent") from None
    f = [Element(g, c) for c in columns]
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            coords = linalg.matvec(Pinv, bracket(f[i], f[j]).coords)
            cell = {k: c for k, c in enumerate(coords) if c}
            if cell:
                table[(i, j)] = cell
    return LieAlgebra.from_table(n, table, name or g.name)


def direct_sum(*algebras: LieAlgebra, name: str = "") -> LieAlgebra:
    table = {}
    offset = 0
    for a in algebras:
        for (i, j), coeffs in a.brackets().items():
            table[(i - 1 + offset, j - 1 + offset)] = {
                k - 1 + offset: c for k, c in coeffs.items()
            }
        offset += a.dim
    label = name or " + ".join(a.name or "?" for a in algebras)
    return LieAlgebra.from_table(offset, table, label)
