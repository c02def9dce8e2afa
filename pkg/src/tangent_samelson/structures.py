"""Samelson-type complex structures as exact rational matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .algebra import Element, LieAlgebra
from .errors import AlgebraError
from .roots import RootDatum
from .tangent import DEFAULT_MAX_DIM, TangentAlgebra, tangent_algebra

PROVENANCES = ("tangent-samelson", "classic-samelson", "proposition-lift", "user-supplied")


@dataclass(frozen=True, eq=False)
class ComplexStructure:
    """Endomorphism J of a real Lie algebra, stored as a dense matrix.

    Column j of ``matrix`` holds the coordinates of ``J e_j``. J^2 = -1 is
    guaranteed for the builders in this module but not enforced here, so
    that arbitrary candidates can be verified.
    """

    algebra: LieAlgebra
    matrix: tuple
    provenance: str = "user-supplied"
    datum: Optional[RootDatum] = None
    tangent: Optional[TangentAlgebra] = None

    def __post_init__(self):
        n = self.algebra.dim
        m = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        if len(m) != n or any(len(row) != n for row in m):
            raise AlgebraError(f"J must be {n}x{n} for {self.algebra!r}")
        if self.provenance not in PROVENANCES:
            raise AlgebraError(f"unknown provenance {self.provenance!r}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def __call__(self, x: Element) -> Element:
        if not (x.algebra is self.algebra or x.algebra == self.algebra):
            raise AlgebraError("element is not in the algebra J acts on")
        return Element(self.algebra, linalg.matvec(self.matrix, x.coords), x.is_complex)

    apply = __call__

    def squared(self):
        return linalg.matmul(self.matrix, self.matrix)

    def image(self, j: int) -> Element:
        """``J e_j`` for a 1-based basis index."""
        return Element(self.algebra, [row[j - 1] for row in self.matrix])

    def same_matrix(self, other: "ComplexStructure") -> bool:
        return self.matrix == other.matrix


def _realify(basis_cols, images, algebra):
    """Matrix of the map sending ``basis_cols[a]`` to ``images[a]``."""
    P = linalg.transpose(basis_cols)
    try:
        Pinv = linalg.inverse(P)
    except ZeroDivisionError:
        raise AlgebraError(
            "real basis built from the torus and root vectors is degenerate"
        ) from None
    return linalg.matmul(linalg.transpose(images), Pinv)


def _neg(v):
    return [-x for x in v]


def build_tangent_samelson(tg: TangentAlgebra, datum: RootDatum) -> ComplexStructure:
    """Complex structure on the tangent algebra built from a root datum.

    On the complexification it sends ``H^c -> H^v``, ``H^v -> -H^c``, acts
    by ``+i`` on the lifts of positive root vectors and by ``-i`` on their
    conjugates. With ``E = X + iY`` this reads ``X -> -Y``, ``Y -> X`` in
    both the complete and the vertical block.
    """
    if not (datum.algebra is tg.base or datum.algebra == tg.base):
        raise AlgebraError("root datum and tangent algebra have different bases")
    n = tg.n
    zeros = [Fraction(0)] * n

    def c(v):
        return list(v) + zeros

    def v(w):
        return zeros + list(w)

    basis, images = [], []
    for h in datum.torus:
        basis += [c(h.coords), v(h.coords)]
        images += [v(h.coords), _neg(c(h.coords))]
    for E in datum.root_vectors:
        X, Y = E.real.coords, E.imag.coords
        for lift in (c, v):
            basis += [lift(X), lift(Y)]
            images += [_neg(lift(Y)), lift(X)]
    J = _realify(basis, images, tg.total)
    return ComplexStructure(tg.total, J, "tangent-samelson", datum, tg)


def build_classic_samelson(g: LieAlgebra, datum: RootDatum) -> ComplexStructure:
    """Complex structure on ``g`` itself; needs an even-dimensional torus.

    Torus directions are paired in the given order (H_1, H_2), (H_3, H_4), ...
    """
    k = datum.rank
    if k % 2:
        raise AlgebraError(
            f"torus dimension {k} is odd: an odd-dimensional compact algebra "
            "admits no almost complex structure"
        )
    if not (datum.algebra is g or datum.algebra == g):
        raise AlgebraError("root datum belongs to a different algebra")
    basis, images = [], []
    for a in range(0, k, 2):
        h1, h2 = datum.torus[a].coords, datum.torus[a + 1].coords
        basis += [list(h1), list(h2)]
        images += [list(h2), _neg(h1)]
    for E in datum.root_vectors:
        X, Y = E.real.coords, E.imag.coords
        basis += [list(X), list(Y)]
        images += [_neg(Y), list(X)]
    J = _realify(basis, images, g)
    return ComplexStructure(g, J, "classic-samelson", datum)


def lift_complex_structure(
    tg: TangentAlgebra, j: ComplexStructure, require_integrable: bool = False
) -> ComplexStructure:
    """``J^c = (J X)^c``, ``J^v = (J X)^v``: block diagonal ``diag(J, J)``."""
    if not (j.algebra is tg.base or j.algebra == tg.base):
        raise AlgebraError("J does not act on the base of this tangent algebra")
    n = tg.n
    if j.squared() != linalg.identity(n, Fraction(-1)):
        raise AlgebraError("J^2 != -1 on the base algebra")
    if require_integrable:
        from .verify import verify_integrability

        item = verify_integrability(j)
        if not item.passed:
            raise AlgebraError("J is not integrable on the base", witness=item.certificate)
    z = Fraction(0)
    m = [list(row) + [z] * n for row in j.matrix] + [[z] * n + list(row) for row in j.matrix]
    return ComplexStructure(tg.total, m, "proposition-lift", j.datum, tg)


def tower_complex_structure(
    g: LieAlgebra, datum: RootDatum, k: int, max_dim: int = DEFAULT_MAX_DIM
) -> ComplexStructure:
    """Tangent Samelson structure on T g, lifted up to level ``k``."""
    if not isinstance(k, int) or k < 1:
        raise AlgebraError(f"tower height must be >= 1, got {k!r}")
    if (2**k) * g.dim > max_dim:
        raise AlgebraError(f"level {k} would have dimension {(2**k) * g.dim} > cap {max_dim}")
    tg = tangent_algebra(g)
    J = build_tangent_samelson(tg, datum)
    for _ in range(k - 1):
        tg = tangent_algebra(tg.total, check=False, _below=tg)
        J = lift_complex_structure(tg, J)
    return J
