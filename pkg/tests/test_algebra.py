from fractions import Fraction

import numpy as np
import pytest

from tangent_samelson import (
    AlgebraError,
    Element,
    LieAlgebra,
    ad_matrix,
    bracket,
    center,
    centralizer,
    change_basis,
    check_compact_type,
    check_jacobi,
    killing_form,
    killing_matrix,
)


def test_so3_bracket_table(so3):
    e1, e2, e3 = so3.basis()
    assert bracket(e1, e2) == -e3
    assert bracket(e1, e3) == e2
    assert bracket(e2, e3) == -e1
    assert bracket(e2, e1) == e3


def test_u3_bracket(u3):
    assert bracket(u3.e(4), u3.e(7)) == 2 * u3.e(1) - 2 * u3.e(2)


def test_u3_has_27_entries(u3):
    assert len(u3.brackets()) == 27


def test_bracket_self_vanishes(u3):
    x = Element(u3, [Fraction(k, 3) for k in range(1, 10)])
    assert bracket(x, x).is_zero()


def test_structure_constants_are_one_based(so3):
    assert so3.structure_constant(1, 2, 3) == -1
    assert so3.structure_constant(2, 1, 3) == 1
    assert so3.structure_constant(1, 1, 1) == 0


def test_bracket_rejects_mixed_algebras(so3, u3):
    with pytest.raises(AlgebraError):
        bracket(so3.e(1), u3.e(1))
    with pytest.raises(AlgebraError):
        bracket(so3.e(1), so3.e(2).complexify())


def test_conflicting_or_diagonal_entries_rejected():
    with pytest.raises(AlgebraError):
        LieAlgebra(2, {(1, 1): {2: 1}})
    with pytest.raises(AlgebraError):
        LieAlgebra(2, {(1, 2): {2: 1}, (2, 1): {2: 1}})
    # consistent duplicate via antisymmetry is fine
    g = LieAlgebra(2, {(1, 2): {2: 1}, (2, 1): {2: -1}})
    assert g.structure_constant(1, 2, 2) == 1


def test_ad_so3_e1(so3):
    # columns: e1 -> 0, e2 -> -e3, e3 -> e2 (expanded by hand from the table)
    expected = [[0, 0, 0], [0, 0, 1], [0, -1, 0]]
    assert ad_matrix(so3.e(1)) == expected


def test_ad_zero(u3):
    assert ad_matrix(u3.zero()) == [[0] * 9 for _ in range(9)]


def test_ad_u3_e1(u3):
    m = ad_matrix(u3.e(1))
    images = {j: [m[r][j - 1] for r in range(9)] for j in range(1, 10)}
    def vec(**kw):
        v = [0] * 9
        for k, c in kw.items():
            v[int(k[1:]) - 1] = c
        return v
    assert images[4] == vec(e7=1)
    assert images[7] == vec(e4=-1)
    assert images[5] == vec(e8=1)
    assert images[8] == vec(e5=-1)
    for j in (1, 2, 3, 6, 9):
        assert images[j] == [0] * 9


def _trace_oracle(g, x, y):
    # independent float route: numpy trace of the product of ad matrices
    a = np.array(ad_matrix(x), dtype=float)
    b = np.array(ad_matrix(y), dtype=float)
    return float(np.trace(a @ b))


def test_killing_so3(so3):
    assert killing_form(so3.e(1), so3.e(1)) == -2
    assert killing_form(so3.e(1), so3.e(2)) == 0
    assert _trace_oracle(so3, so3.e(1), so3.e(1)) == -2.0


def test_killing_matrix_so3_eigenvalues(so3):
    B = np.array(killing_matrix(so3), dtype=float)
    assert np.allclose(np.linalg.eigvalsh(B), [-2, -2, -2])


def test_killing_abelian_is_zero():
    g = LieAlgebra(3, {}, "R3")
    assert all(v == 0 for row in killing_matrix(g) for v in row)


def test_killing_matrix_matches_killing_form(u3):
    B = killing_matrix(u3)
    for i in (1, 4, 7):
        for j in (1, 2, 4, 7):
            assert B[i - 1][j - 1] == killing_form(u3.e(i), u3.e(j))


def test_jacobi_passes_on_fixtures(so3, u3):
    assert check_jacobi(so3).passed
    assert check_jacobi(u3).passed


def test_jacobi_sign_flip_of_so3_still_holds():
    # In dimension 3 with [e_i, e_j] proportional to e_k every Jacobi term is
    # of the form [e_k, e_k]; flipping the sign of c[1][2][3] gives so(2,1),
    # still a Lie algebra. Direct expansion of the Jacobi sum confirms it.
    flipped = LieAlgebra(3, {(1, 2): {3: 1}, (1, 3): {2: 1}, (2, 3): {1: -1}})
    e1, e2, e3 = flipped.basis()
    direct = bracket(bracket(e1, e2), e3) + bracket(bracket(e2, e3), e1) + bracket(bracket(e3, e1), e2)
    assert direct.is_zero()
    assert check_jacobi(flipped).passed


def test_jacobi_failure_certificate():
    # so(3) with an extra e1 component in [e1, e2]
    bad = LieAlgebra(3, {(1, 2): {3: -1, 1: 1}, (1, 3): {2: 1}, (2, 3): {1: -1}})
    e1, e2, e3 = bad.basis()
    direct = bracket(bracket(e1, e2), e3) + bracket(bracket(e2, e3), e1) + bracket(bracket(e3, e1), e2)
    item = check_jacobi(bad)
    assert not item.passed
    assert item.certificate["triple"] == [1, 2, 3]
    assert item.certificate["residual"] == [str(c) for c in direct.coords]
    assert not direct.is_zero()


def test_compact_type_so3_and_u3(so3, u3):
    assert check_compact_type(so3).passed
    assert check_compact_type(u3).passed
    z = center(u3)
    assert len(z) == 1
    assert z[0] == u3.e(1) + u3.e(2) + u3.e(3)


def test_compact_type_fails_on_aff():
    g = LieAlgebra(2, {(1, 2): {2: 1}})
    assert killing_form(g.e(1), g.e(1)) == 1
    item = check_compact_type(g)
    assert not item.passed
    v = Element(g, [Fraction(x) for x in item.certificate["vector"]])
    assert killing_form(v, v) > 0


def test_compact_type_fails_on_nilpotent_radical():
    heis = LieAlgebra(3, {(1, 2): {3: 1}})
    item = check_compact_type(heis)
    assert not item.passed
    assert item.certificate["reason"] == "radical_not_central"


def test_compact_type_fails_on_sl2():
    sl2 = LieAlgebra(3, {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}})
    assert not check_compact_type(sl2).passed


def test_abelian_is_compact_type():
    assert check_compact_type(LieAlgebra(2, {})).passed


def test_centralizer_examples(so3, u3):
    assert centralizer(so3, [so3.e(1)]) == [so3.e(1)]
    assert centralizer(so3, []) == so3.basis()
    assert centralizer(u3, [u3.e(1), u3.e(2), u3.e(3)]) == [u3.e(1), u3.e(2), u3.e(3)]


def test_change_basis_round_trip(so3):
    cols = [[1, 1, 0], [0, 1, 0], [0, 0, 2]]
    h = change_basis(so3, cols)
    assert check_jacobi(h).passed
    assert check_compact_type(h).passed
    assert change_basis(h, [[1, -1, 0], [0, 1, 0], [0, 0, Fraction(1, 2)]]) == so3
