import itertools
from fractions import Fraction

import pytest

from tangent_samelson import (
    AlgebraError,
    DecompositionError,
    Element,
    GaussianRational,
    LieAlgebra,
    ad_matrix,
    bracket,
    change_basis,
    choose_positive_system,
    direct_sum,
    find_maximal_torus,
    linalg,
    normalize_root_vectors,
    root_space_decomposition,
)
from tangent_samelson.roots import Root, root_residuals

i = GaussianRational(0, 1)


def values(datum):
    return [r.values for r in datum.roots]


def test_hint_so3(so3):
    assert find_maximal_torus(so3, hint=[so3.e(1)]) == [so3.e(1)]


def test_hint_u3(u3):
    hint = [u3.e(1), u3.e(2), u3.e(3)]
    assert find_maximal_torus(u3, hint=hint) == hint


def test_hint_not_abelian(so3):
    with pytest.raises(AlgebraError, match="not abelian"):
        find_maximal_torus(so3, hint=[so3.e(1), so3.e(2)])


def test_hint_not_maximal(u3):
    with pytest.raises(AlgebraError, match="not maximal") as info:
        find_maximal_torus(u3, hint=[u3.e(1), u3.e(2)])
    witness = info.value.witness
    assert bracket(witness, u3.e(1)).is_zero()


def test_abelian_torus_is_everything():
    g = LieAlgebra(3, {})
    assert find_maximal_torus(g) == g.basis()


def test_search_finds_a_maximal_torus(u3):
    torus = find_maximal_torus(u3, seed=5)
    assert len(torus) == 3
    for a, b in itertools.combinations(torus, 2):
        assert bracket(a, b).is_zero()


def test_random_search_in_a_rotated_basis(so3):
    # no coordinate torus exists after this change of basis
    g = change_basis(so3, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    torus = find_maximal_torus(g, seed=1)
    assert len(torus) == 1


def test_so3_decomposition(so3_datum, so3):
    assert values(so3_datum) == [(i,)]
    assert so3_datum.root_vectors[0] == so3.e(2) + i * so3.e(3)


def test_u3_decomposition(u3_datum, u3):
    assert values(u3_datum) == [(i, -i, 0), (-i, 0, i), (0, -i, i)]
    E = u3_datum.root_vectors
    assert E[0] == u3.e(4) - i * u3.e(7)
    assert E[1] == u3.e(5) + i * u3.e(8)
    assert E[2] == u3.e(6) + i * u3.e(9)


def test_abelian_decomposition():
    g = LieAlgebra(2, {})
    d = root_space_decomposition(g, g.basis())
    assert d.roots == () and d.rank == 2


def test_exactness_gate(u3_datum, so3_datum):
    for d in (u3_datum, so3_datum):
        assert list(root_residuals(d)) == []
        assert d.rank + 2 * len(d.roots) == d.algebra.dim


def test_conjugate_vectors_have_negated_roots(u3_datum):
    for root, E in u3_datum.pairs():
        for h, val in zip(u3_datum.torus, root.values):
            F = E.conjugate()
            image = Element(F.algebra, linalg.matvec(ad_matrix(h), F.coords), True)
            assert image == F * (-val)


def test_positive_system_oracle(u3_datum):
    # Im alpha(2e1 + e2 + 3e3) from the root values: 1, 1, 2
    p = (2, 1, 3)
    assert [r(p).im for r in u3_datum.roots] == [1, 1, 2]


def test_default_spiral_on_so3(so3):
    d = root_space_decomposition(so3, [so3.e(1)])
    assert values(d) == [(i,)]
    assert d.regular_element == so3.e(1)


def test_negated_regular_swaps_systems(u3, u3_datum):
    neg = choose_positive_system(u3_datum, [-2, -1, -3])
    assert {r.values for r in neg.roots} == {
        tuple(-v for v in r.values) for r in u3_datum.roots
    }


def test_non_regular_rejected(u3_datum):
    with pytest.raises(AlgebraError, match="annihilates"):
        choose_positive_system(u3_datum, [1, 1, 1])


def test_regular_as_full_coordinates(u3, u3_datum):
    d = choose_positive_system(u3_datum, 2 * u3.e(1) + u3.e(2) + 3 * u3.e(3))
    assert d.roots == u3_datum.roots and d.root_vectors == u3_datum.root_vectors


def test_root_order_independent_of_input_order(u3_datum):
    shuffled = u3_datum.__class__(
        u3_datum.algebra, u3_datum.torus,
        tuple(reversed(u3_datum.roots)), tuple(reversed(u3_datum.root_vectors)),
    )
    again = choose_positive_system(shuffled, [2, 1, 3])
    assert again.roots == u3_datum.roots
    assert again.root_vectors == u3_datum.root_vectors


def test_normalization_is_idempotent_and_scaling_invariant(u3_datum):
    scaled = u3_datum.with_scaled_vectors([GaussianRational(2, -3), i, Fraction(-1, 7)])
    assert normalize_root_vectors(scaled).root_vectors == u3_datum.root_vectors
    for E in u3_datum.root_vectors:
        assert E.conjugate().conjugate() == E


def test_closure_of_positive_system(u3_datum):
    pos = {r.values for r in u3_datum.roots}
    every = pos | {tuple(-v for v in r) for r in pos}
    for a, b in itertools.product(pos, repeat=2):
        s = tuple(x + y for x, y in zip(a, b))
        if s in every:
            assert s in pos


def test_root_space_brackets(u3_datum):
    """[E_a, E_b] lies in the (a+b) root space, or vanishes if a+b is no root."""
    allr = u3_datum.all_roots()
    table = {r.values: E for r, E in allr}
    torus_span = [list(h.complexify().coords) for h in u3_datum.torus]
    for (ra, Ea), (rb, Eb) in itertools.product(allr, repeat=2):
        br = bracket(Ea, Eb)
        s = tuple(x + y for x, y in zip(ra.values, rb.values))
        if not any(s):
            assert linalg.in_span(torus_span, br.coords)
        elif s in table:
            assert linalg.in_span([list(table[s].coords)], br.coords)
        else:
            assert br.is_zero()


def test_not_maximal_torus_rejected(u3):
    with pytest.raises(DecompositionError, match="not maximal"):
        root_space_decomposition(u3, [u3.e(1), u3.e(2)])


def test_irrational_roots_fail_loudly(so3):
    # torus e1 + e2 gives root values +-i*sqrt(2)
    with pytest.raises(DecompositionError):
        root_space_decomposition(so3, [so3.e(1) + so3.e(2)])


def test_non_compact_rejected():
    sl2 = LieAlgebra(3, {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}})
    with pytest.raises(DecompositionError, match="purely imaginary"):
        root_space_decomposition(sl2, [sl2.e(1)])


def test_so3_squared_sum_with_fraction_roots(so3):
    # scaling the torus generator by 1/2 halves the root value
    d = root_space_decomposition(so3, [Fraction(1, 2) * so3.e(1)])
    assert values(d) == [(i / 2,)]


def test_so3xso3(so3):
    g = direct_sum(so3, so3)
    d = root_space_decomposition(g, [g.e(1), g.e(4)])
    assert values(d) == [(i, 0), (0, i)]


def test_zero_functional_is_not_a_root():
    with pytest.raises(ValueError):
        Root((GaussianRational(0),))
