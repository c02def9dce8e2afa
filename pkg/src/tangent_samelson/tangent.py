"""Tangent Lie algebras g + g and their iterated towers.

The total space uses the basis ``(e_1^c, ..., e_n^c, e_1^v, ..., e_n^v)``:
complete lifts occupy the first n coordinates, vertical lifts the last n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Element, LieAlgebra, check_jacobi
from .errors import AlgebraError

DEFAULT_MAX_DIM = 1024


@dataclass(frozen=True, eq=False)
class TangentAlgebra:
    base: LieAlgebra
    total: LieAlgebra
    below: Optional["TangentAlgebra"] = None

    @property
    def n(self) -> int:
        return self.base.dim

    @property
    def level(self) -> int:
        return 1 if self.below is None else self.below.level + 1

    def complete_index(self, i: int) -> int:
        return i

    def vertical_index(self, i: int) -> int:
        return self.n + i

    def complete_lift(self, x: Element) -> Element:
        self._check_base(x)
        z = x.coords[0] * 0
        return Element(self.total, list(x.coords) + [z] * self.n, x.is_complex)

    def vertical_lift(self, x: Element) -> Element:
        self._check_base(x)
        z = x.coords[0] * 0
        return Element(self.total, [z] * self.n + list(x.coords), x.is_complex)

    def split(self, y: Element):
        """Inverse of the lifts: ``y = a^c + b^v`` returns ``(a, b)``."""
        if y.algebra != self.total:
            raise AlgebraError("element is not in the tangent algebra")
        n = self.n
        return (
            Element(self.base, y.coords[:n], y.is_complex),
            Element(self.base, y.coords[n:], y.is_complex),
        )

    def _check_base(self, x):
        if not (x.algebra is self.base or x.algebra == self.base):
            raise AlgebraError("element is not in the base algebra")


def _tangent_name(name: str) -> str:
    return f"T({name})" if name else "T(?)"


def tangent_algebra(g: LieAlgebra, check: bool = True, _below=None) -> TangentAlgebra:
    """Lie algebra of TG: ``[(X1,X2),(Y1,Y2)] = ([X1,Y1], [X1,Y2] + [X2,Y1])``."""
    if check:
        item = check_jacobi(g)
        if not item.passed:
            raise AlgebraError(
                f"base algebra fails the Jacobi identity: {item.detail}",
                witness=item.certificate,
            )
    n = g.dim
    table = {}
    for (i, j), coeffs in g.brackets().items():
        i0, j0 = i - 1, j - 1
        cc = {k - 1: c for k, c in coeffs.items()}
        vv = {k - 1 + n: c for k, c in coeffs.items()}
        table[(i0, j0)] = cc               # [e_i^c, e_j^c] = [e_i, e_j]^c
        table[(i0, j0 + n)] = vv           # [e_i^c, e_j^v] = [e_i, e_j]^v
        table[(j0, i0 + n)] = {k: -c for k, c in vv.items()}  # [e_j^c, e_i^v]
    total = LieAlgebra.from_table(2 * n, table, _tangent_name(g.name))
    return TangentAlgebra(g, total, _below)


def tower(g: LieAlgebra, k: int, max_dim: int = DEFAULT_MAX_DIM):
    """Chain ``[T g, T^2 g, ..., T^k g]``."""
    if not isinstance(k, int) or k < 1:
        raise AlgebraError(f"tower height must be >= 1, got {k!r}")
    if (2**k) * g.dim > max_dim:
        raise AlgebraError(
            f"level {k} would have dimension {(2**k) * g.dim} > cap {max_dim}"
        )
    chain = []
    current = g
    below = None
    for level in range(k):
        tg = tangent_algebra(current, check=(level == 0), _below=below)
        chain.append(tg)
        below = tg
        current = tg.total
    return chain
