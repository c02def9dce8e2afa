"""Shared generators for randomized tests."""

from fractions import Fraction

from tangent_samelson import LieAlgebra, change_basis, direct_sum, tangent_algebra
from tangent_samelson.io import parse_algebra


def so3():
    return parse_algebra("so3").algebra


def u3():
    return parse_algebra("u3").algebra


def pool():
    """Jacobi-valid algebras of dimension <= 6 in integer bases."""
    s = so3()
    aff2 = LieAlgebra(2, {(1, 2): {2: 1}}, "aff(1)")
    heis = LieAlgebra(3, {(1, 2): {3: 1}}, "heis3")
    sl2 = LieAlgebra(3, {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}}, "sl2")
    u2 = parse_algebra("u2").algebra
    gr4 = parse_algebra("gr4").algebra
    r1 = LieAlgebra(1, {}, "R")
    return [
        s, aff2, heis, sl2, u2, gr4,
        direct_sum(s, r1), direct_sum(aff2, aff2), direct_sum(s, s),
        direct_sum(sl2, heis), tangent_algebra(s).total, tangent_algebra(aff2).total,
        LieAlgebra(5, {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}, (2, 3): {5: 1}}, "nil5"),
    ]


def random_rational(rng, num=5, den=4):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_invertible(rng, n, lo=-2, hi=2):
    from tangent_samelson import linalg

    while True:
        m = [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
        if linalg.rank(m, n) == n:
            return m


def random_algebra(rng, max_dim=6):
    """Random algebra from the pool written in a random integer basis."""
    candidates = [g for g in pool() if g.dim <= max_dim]
    g = rng.choice(candidates)
    cols = random_invertible(rng, g.dim)
    return change_basis(g, cols, g.name)


def random_element(rng, g, complex_=False):
    from tangent_samelson import Element, GaussianRational

    if complex_:
        return Element(
            g, [GaussianRational(random_rational(rng), random_rational(rng)) for _ in range(g.dim)], True
        )
    return Element(g, [random_rational(rng) for _ in range(g.dim)])


def random_almost_complex(rng, n):
    """Random rational J with J^2 = -1 (n even): conjugate of the standard one."""
    from tangent_samelson import linalg

    j0 = [[Fraction(0)] * n for _ in range(n)]
    for a in range(0, n, 2):
        j0[a + 1][a] = Fraction(1)
        j0[a][a + 1] = Fraction(-1)
    P = random_invertible(rng, n)
    return linalg.matmul(linalg.matmul(P, j0), linalg.inverse(P))


def random_matrix(rng, n):
    return [[random_rational(rng) for _ in range(n)] for _ in range(n)]
