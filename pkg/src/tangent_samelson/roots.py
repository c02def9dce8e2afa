"""Maximal tori, root space decomposition and positive systems.

The eigen-search runs in floating point (numpy); every value that leaves
this module has been snapped to Gaussian rationals and re-verified with
exact arithmetic.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import linalg
from .algebra import (
    Element,
    LieAlgebra,
    ad_matrix,
    bracket,
    centralizer,
    is_abelian_set,
)
from .errors import AlgebraError, DecompositionError
from .scalars import GaussianRational, snap_complex

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
MAX_DENOMINATOR = 10**6


@dataclass(frozen=True)
class Root:
    """Root given by its values ``alpha(H_i)`` on the torus basis."""

    values: tuple
    positive: bool = True

    def __post_init__(self):
        if not any(self.values):
            raise ValueError("the zero functional is not a root")

    def __neg__(self):
        return Root(tuple(-v for v in self.values), not self.positive)

    def __call__(self, coefficients) -> GaussianRational:
        """Value on ``sum_i coefficients[i] * H_i``."""
        total = GaussianRational(0)
        for p, v in zip(coefficients, self.values):
            if p:
                total = total + v * p
        return total

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class RootDatum:
    """Torus, positive roots and their root vectors.

    ``root_vectors[a]`` spans the root space of ``roots[a]``; the vector for
    ``-roots[a]`` is its complex conjugate.
    """

    algebra: LieAlgebra
    torus: tuple
    roots: tuple = ()
    root_vectors: tuple = ()
    regular_element: Optional[Element] = None

    @property
    def rank(self) -> int:
        return len(self.torus)

    def negative_vectors(self):
        return tuple(E.conjugate() for E in self.root_vectors)

    def pairs(self):
        return list(zip(self.roots, self.root_vectors))

    def all_roots(self):
        """Every root with its vector: positives first, then negatives."""
        pos = list(zip(self.roots, self.root_vectors))
        neg = [(-r, E.conjugate()) for r, E in pos]
        return pos + neg

    def root_of(self, values) -> Optional[Root]:
        for r, _ in self.all_roots():
            if r.values == tuple(values):
                return r
        return None

    def with_scaled_vectors(self, factors) -> "RootDatum":
        """Copy with ``E_alpha`` replaced by ``factors[a] * E_alpha`` (no renormalisation)."""
        vectors = tuple(E * GaussianRational.coerce(f) for E, f in zip(self.root_vectors, factors))
        return replace(self, root_vectors=vectors)


def _check_torus(g: LieAlgebra, torus: Sequence[Element], exc):
    for h in torus:
        if h.algebra != g:
            raise AlgebraError("torus element belongs to a different algebra")
        if h.is_complex:
            raise AlgebraError("torus elements must be real")
    coords = [list(h.coords) for h in torus]
    if not torus or linalg.rank(coords, g.dim) != len(torus):
        raise AlgebraError("torus basis is empty or linearly dependent")
    for a, b in itertools.combinations(range(len(torus)), 2):
        if not bracket(torus[a], torus[b]).is_zero():
            raise AlgebraError(
                f"torus is not abelian: [H_{a + 1}, H_{b + 1}] != 0",
                witness=(a + 1, b + 1),
            )
    for c in centralizer(g, torus):
        if not linalg.in_span(coords, c.coords):
            raise exc("torus is not maximal: its centralizer is strictly larger", witness=c)


class _NotMaximal(DecompositionError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def find_maximal_torus(
    g: LieAlgebra,
    seed: Optional[int] = 0,
    hint: Optional[Sequence[Element]] = None,
    max_tries: int = 64,
):
    """Rational basis of a maximal abelian subalgebra.

    A supplied ``hint`` is validated and returned unchanged. Otherwise the
    centralizer of a random element is tried until it is abelian (and
    therefore maximal abelian).
    """
    if hint is not None:
        hint = list(hint)
        _check_torus(g, hint, AlgebraError)
        return hint
    basis_torus = _coordinate_torus(g)
    if basis_torus is not None:
        return basis_torus
    rng = random.Random(seed)
    for attempt in range(max_tries):
        x = Element(
            g, [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(g.dim)]
        )
        c = centralizer(g, [x])
        if is_abelian_set(c):
            log.debug("maximal torus of dim %d after %d tries", len(c), attempt + 1)
            return c
    raise DecompositionError(
        f"no abelian centralizer found in {max_tries} random samples (seed={seed})"
    )


def _coordinate_torus(g: LieAlgebra):
    """Maximal abelian subalgebra spanned by basis vectors, if a greedy pass finds one.

    Coordinate tori keep root values rational for algebras written in an
    integer basis, where a random torus element usually would not.
    """
    basis = g.basis()
    for start in range(g.dim):
        chosen = [basis[start]]
        for e in basis:
            if e in chosen:
                continue
            if all(bracket(e, h).is_zero() for h in chosen):
                chosen.append(e)
        coords = [list(h.coords) for h in chosen]
        if all(linalg.in_span(coords, c.coords) for c in centralizer(g, chosen)):
            return chosen
    return None


def torus_coefficients(torus: Sequence[Element], h: Element):
    """Exact coefficients ``p`` with ``h = sum_i p_i H_i``."""
    k = len(torus)
    n = h.algebra.dim
    rows = [[torus[i].coords[r] for i in range(k)] + [h.coords[r]] for r in range(n)]
    red, pivots = linalg.rref(rows, k + 1)
    if k in pivots:
        raise AlgebraError("element does not lie in the torus")
    p = [Fraction(0)] * k
    for row, pc in zip(red, pivots):
        p[pc] = row[k]
    return tuple(p)


def _float_matrix(m):
    return np.array([[float(x) for x in row] for row in m], dtype=float)


def _clusters(w, tol):
    n = len(w)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(n):
        for b in range(a + 1, n):
            if abs(w[a] - w[b]) <= tol:
                parent[find(a)] = find(b)
    groups = {}
    for a in range(n):
        groups.setdefault(find(a), []).append(a)
    return list(groups.values())


def _numeric_root_vectors(ads, k, rng, attempts=16):
    """Approximate simultaneous eigenvectors for the nonzero roots."""
    scale = max(1.0, max(np.abs(a).max() for a in ads))
    ctol = 1e-6 * scale
    for _ in range(attempts):
        coeffs = [rng.randint(1, 97) * rng.choice((-1, 1)) for _ in range(k)]
        A = sum(c * a for c, a in zip(coeffs, ads))
        w, V = np.linalg.eig(A)
        groups = _clusters(w, ctol * max(1, max(abs(c) for c in coeffs)))
        zero = [grp for grp in groups if abs(w[grp[0]]) <= ctol * max(abs(c) for c in coeffs)]
        if sum(len(grp) for grp in zero) != k:
            continue
        vectors = []
        ok = True
        for grp in groups:
            if grp in zero:
                continue
            Vc = V[:, grp]
            if len(grp) > 1:
                # refine inside the cluster with another combination
                sub = [np.linalg.lstsq(Vc, a @ Vc, rcond=None)[0] for a in ads]
                c2 = [rng.randint(1, 997) * rng.choice((-1, 1)) for _ in range(k)]
                w2, W = np.linalg.eig(sum(c * s for c, s in zip(c2, sub)))
                if len(_clusters(w2, ctol)) != len(grp):
                    ok = False
                    break
                Vc = Vc @ W
            vectors.extend(Vc[:, i] for i in range(Vc.shape[1]))
        if ok:
            return vectors
    raise DecompositionError("could not separate the root spaces numerically")


def _snap_vector(v, tol):
    v = v / v[np.argmax(np.abs(v))]
    out = []
    for z in v:
        q = snap_complex(complex(z), tol, MAX_DENOMINATOR)
        if q is None:
            return None
        out.append(q)
    return out


def _exact_root_vector(g, torus_ads, values, v, tol):
    n = g.dim

    def is_eigen(coords):
        for ad, a in zip(torus_ads, values):
            img = linalg.matvec(ad, coords)
            if any(x != a * y for x, y in zip(img, coords)):
                return False
        return True

    snapped = _snap_vector(v, tol) if v is not None else None
    if snapped is not None and any(snapped) and is_eigen(snapped):
        return Element(g, snapped, True)
    rows = []
    for ad, a in zip(torus_ads, values):
        for r in range(n):
            row = [GaussianRational.coerce(x) for x in ad[r]]
            row[r] = row[r] - a
            rows.append(row)
    kernel = linalg.nullspace(rows, n)
    if not kernel:
        raise DecompositionError(
            f"snapped root values {[str(a) for a in values]} are not exact eigenvalues; "
            "the root values are probably irrational in this torus basis"
        )
    if len(kernel) != 1:
        raise DecompositionError(
            f"root space for values {[str(a) for a in values]} has dimension {len(kernel)}, expected 1"
        )
    return Element(g, kernel[0], True)


def normalize_vector(E: Element) -> Element:
    """Scale so that the first nonzero coordinate equals 1."""
    lead = next(c for c in E.coords if c)
    return E / lead


def _pivot(E: Element) -> int:
    return next(i for i, c in enumerate(E.coords) if c)


def _root_sort_key(pair):
    root, E = pair
    return (_pivot(E), tuple((v.im, v.re) for v in root.values))


def root_space_decomposition(
    g: LieAlgebra,
    torus: Sequence[Element],
    tol: float = DEFAULT_TOL,
    regular=None,
    seed: Optional[int] = 0,
) -> RootDatum:
    """Decompose the complexification of ``g`` under ``torus``.

    Returns a datum holding only the positive roots, selected by
    ``regular`` (see :func:`choose_positive_system`).
    """
    if tol <= 0:
        raise AlgebraError("tol must be positive")
    torus = tuple(torus)
    _check_torus(g, torus, _NotMaximal)
    k = len(torus)
    n = g.dim
    exact_ads = [ad_matrix(h) for h in torus]
    found = []
    if k < n:
        ads = [_float_matrix(a) for a in exact_ads]
        rng = random.Random(seed)
        vectors = _numeric_root_vectors(ads, k, rng)
        seen = set()
        for v in vectors:
            values = []
            vh = np.conj(v)
            norm = float(np.real(vh @ v))
            for i, a in enumerate(ads):
                lam = complex(vh @ (a @ v)) / norm
                scale = max(1.0, float(np.abs(a).max()))
                q = snap_complex(lam, tol * scale, MAX_DENOMINATOR)
                if q is None:
                    raise DecompositionError(
                        f"eigenvalue {lam!r} of ad(H_{i + 1}) has no rational "
                        f"snap within tol={tol} and denominator <= {MAX_DENOMINATOR}"
                    )
                if q.re != 0:
                    raise DecompositionError(
                        f"root value {q} on H_{i + 1} is not purely imaginary; "
                        "the algebra is not of compact type"
                    )
                values.append(q)
            values = tuple(values)
            if not any(values):
                raise DecompositionError("a nonzero eigenvalue snapped to the zero root")
            if values in seen:
                raise DecompositionError(f"root {values} has a root space of dimension > 1")
            seen.add(values)
            E = _exact_root_vector(g, exact_ads, values, v, tol)
            found.append((Root(values), normalize_vector(E)))
        if len(found) + k != n:
            raise DecompositionError(
                f"dimension count failed: rank {k} + {len(found)} roots != {n}"
            )
        valueset = {r.values for r, _ in found}
        for r, _ in found:
            if tuple(-v for v in r.values) not in valueset:
                raise DecompositionError(f"root {r} has no negative partner")
    datum = RootDatum(g, torus, tuple(r for r, _ in found), tuple(E for _, E in found))
    return choose_positive_system(datum, regular, _all_roots=True)


def _spiral(k: int, max_radius: int = 64):
    for r in range(1, max_radius + 1):
        shell = [
            p for p in itertools.product(range(-r, r + 1), repeat=k)
            if max(abs(x) for x in p) == r
        ]
        shell.sort(reverse=True)
        yield from shell


def _regular_coefficients(datum: RootDatum, regular):
    k = datum.rank
    if isinstance(regular, Element):
        return torus_coefficients(datum.torus, regular)
    values = [Fraction(x) for x in regular]
    if len(values) == k:
        return tuple(values)
    if len(values) == datum.algebra.dim:
        return torus_coefficients(datum.torus, Element(datum.algebra, values))
    raise AlgebraError(
        f"regular element needs {k} torus coefficients or {datum.algebra.dim} coordinates"
    )


def choose_positive_system(datum: RootDatum, regular=None, _all_roots=False) -> RootDatum:
    """Select the roots with ``Im alpha(H0) > 0`` as the positive system.

    ``regular`` may be an Element of the torus, a coefficient vector over
    the torus basis, or a full coordinate vector. When omitted, ``H0`` is
    the first regular integer combination in a deterministic spiral.
    """
    if _all_roots:
        pairs = list(zip(datum.roots, datum.root_vectors))
    else:
        pairs = datum.all_roots()
    if regular is None:
        for p in _spiral(datum.rank):
            if all(r(p).im != 0 for r, _ in pairs):
                coeffs = tuple(Fraction(x) for x in p)
                break
        else:
            raise DecompositionError("no regular element found in the search spiral")
    else:
        coeffs = _regular_coefficients(datum, regular)
        for r, _ in pairs:
            if r(coeffs).im == 0:
                raise AlgebraError(
                    f"regular element annihilates root {r}", witness=r
                )
    positive = []
    for r, E in pairs:
        if r(coeffs).im > 0:
            positive.append((Root(r.values, True), normalize_vector(E)))
    positive.sort(key=_root_sort_key)
    h0 = Element(datum.algebra, [Fraction(0)] * datum.algebra.dim)
    for p, h in zip(coeffs, datum.torus):
        h0 = h0 + p * h
    return replace(
        datum,
        roots=tuple(r for r, _ in positive),
        root_vectors=tuple(E for _, E in positive),
        regular_element=h0,
    )


def normalize_root_vectors(datum: RootDatum) -> RootDatum:
    return replace(
        datum, root_vectors=tuple(normalize_vector(E) for E in datum.root_vectors)
    )


def root_residuals(datum: RootDatum):
    """Yield ``(label, residual)`` for every exact eigen-equation that fails."""
    ads = [ad_matrix(h) for h in datum.torus]
    for a, (root, E) in enumerate(datum.all_roots()):
        for i, (ad, val) in enumerate(zip(ads, root.values)):
            img = linalg.matvec(ad, E.coords)
            res = [x - val * y for x, y in zip(img, E.coords)]
            if any(res):
                yield (a, i), res
