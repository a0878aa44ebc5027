import random

import pytest

from pseudoreal.cyclotomic import field
from pseudoreal.errors import DivisionByZero, NotFiniteOrder, OrderNotFound
from pseudoreal.projlinear import (CharPolyClass, Matrix3, ProjElement, charpoly, charpoly_class_eq,
                                   charpoly_class_key, conjugacy_necessary, diagonal_charpoly, eigen_scalar_search,
                                   eigenratio_class, format_matrix, galois_sigma, matrix_from_json, matrix_to_json,
                                   proj, proj_eq, proj_mul, proj_order)
from pseudoreal.acceptance import random_matrix


def diag(*xs, N=None):
    return ProjElement(Matrix3.diag(*xs, N=N))


def test_identity_and_small_orders():
    F3 = field(3)
    M = ProjElement(Matrix3([[1, 2, 0], [0, 1, 0], [3, 0, 1]]))
    assert proj_mul(ProjElement(Matrix3.identity()), M) == M
    g = diag(1, F3.zeta(1), F3.zeta(2))
    assert (g ** 3).is_identity()
    T = ProjElement(Matrix3.permutation("YZX"))
    assert (T ** 3).is_identity()


def test_projective_equality():
    assert proj_eq(diag(2, 2, 2), ProjElement(Matrix3.identity()))
    assert not proj_eq(diag(1, 1, -1), ProjElement(Matrix3.identity()))


def test_sigma_V_is_inverse(hgens):
    V = hgens["V"]
    assert (V.lift * V.lift.conj()) == Matrix3.identity(12) * 3
    assert galois_sigma(V) == ProjElement(V.lift.adjugate() * 3)
    assert galois_sigma(V) == V.inverse()


def test_galois_sigma_examples(hgens):
    F5 = field(5)
    g = diag(1, F5.zeta(1), F5.zeta(4))
    assert galois_sigma(g) == diag(1, F5.zeta(4), F5.zeta(1))
    R = ProjElement(Matrix3([[1, 2, 0], [0, 3, 1], [1, 0, 1]]))
    assert galois_sigma(R) == R
    S = hgens["S"]
    assert galois_sigma(S) == S.inverse()


def test_orders(hgens):
    assert proj_order(ProjElement(Matrix3.identity())) == 1
    assert proj_order(diag(1, 1, -1)) == 2
    assert proj_order(hgens["V"]) == 4
    with pytest.raises(OrderNotFound):
        proj_order(ProjElement(Matrix3([[1, 1, 0], [0, 1, 0], [0, 0, 1]])), 50)


def test_singular_lift_rejected():
    with pytest.raises(DivisionByZero):
        ProjElement(Matrix3([[1, 2, 3], [2, 4, 6], [0, 0, 1]]))


def test_canonical_scaling():
    F = field(5)
    g = ProjElement(Matrix3.diag(F.zeta(2), F.zeta(3), 1, N=5))
    assert g.canonical[0, 0] == 1
    assert g == diag(1, F.zeta(1), F.zeta(3))


def test_charpoly_examples():
    assert [x.rational_value() for x in charpoly(Matrix3.identity())] == [1, -3, 3, -1]
    F5 = field(5)
    p = charpoly(Matrix3.diag(1, F5.zeta(1), F5.zeta(4), N=5))
    assert all(x.is_real() for x in p)
    q = charpoly(Matrix3.diag(F5.zeta(3), F5.zeta(4), F5.zeta(2), N=5))
    assert not all(x.is_real() for x in q)


def test_charpoly_class_examples():
    F3 = field(3)
    p = diagonal_charpoly(5, (0, 1, 4))
    assert charpoly_class_eq(p, p)
    rng = random.Random(1)
    M = random_matrix(rng, 3)
    assert charpoly_class_eq(charpoly(M), charpoly(M * F3.zeta(1)))
    assert not charpoly_class_eq(p, diagonal_charpoly(5, (0, 2, 3)))
    assert CharPolyClass(p) == CharPolyClass(diagonal_charpoly(5, (1, 2, 0)))


def test_charpoly_class_key_matches_eq():
    rng = random.Random(7)
    polys = [diagonal_charpoly(12, (rng.randrange(12), rng.randrange(12), rng.randrange(12))) for _ in range(40)]
    for p in polys:
        for q in polys:
            assert (charpoly_class_key(p) == charpoly_class_key(q)) == charpoly_class_eq(p, q)


def test_eigenratio_examples():
    F5 = field(5)
    assert (1, 4) in eigenratio_class(diag(1, F5.zeta(1), F5.zeta(4)), 5)
    assert (1, 4) in eigenratio_class(diag(F5.zeta(3), F5.zeta(4), F5.zeta(2)), 5)
    F3 = field(3)
    assert (0, 1) in eigenratio_class(diag(1, 1, F3.zeta(1)), 3)
    with pytest.raises(NotFiniteOrder):
        eigenratio_class(diag(1, 1, F3.zeta(1)), 2)


def test_conjugacy_necessary_examples():
    F3, F5 = field(3), field(5)
    A = diag(1, 1, F3.zeta(1))
    assert not conjugacy_necessary(A, A.inverse(), 3)
    B = diag(1, F5.zeta(1), F5.zeta(4))
    assert conjugacy_necessary(B, B.inverse(), 5)
    assert conjugacy_necessary(A, A, 3)


def test_conjugacy_invariant_under_change_of_basis():
    F7 = field(7)
    g = diag(1, F7.zeta(1), F7.zeta(3))
    h = ProjElement(Matrix3([[1, 1, 0], [0, 1, 2], [1, 0, 1]]))
    assert conjugacy_necessary(g, g.conjugate_by(h), 7)
    assert not conjugacy_necessary(g, g.inverse(), 7)


def test_eigen_scalar_search():
    assert eigen_scalar_search((0, 0, 1), (0, 0, -1), 5) == []
    assert eigen_scalar_search((0, 1, 4), (0, 4, 1), 5) == [0]


def test_matrix_json_roundtrip(hgens):
    M = hgens["V"].lift
    assert matrix_from_json(matrix_to_json(M)) == M


def test_format_matrix_has_numeric_part():
    F5 = field(5)
    out = format_matrix(Matrix3.diag(1, F5.zeta(1), F5.zeta(4), N=5))
    assert "numeric" in out and "0.309017" in out


def test_cross_field_products():
    g = proj([[1, 0, 0], [0, field(3).zeta(1), 0], [0, 0, 1]])
    h = proj([[1, 0, 0], [0, 1, 0], [0, 0, field(4).i()]])
    gh = g * h
    assert gh.N == 12
    assert gh == h * g


def test_matrix_json_accepts_expressions():
    from pseudoreal.projlinear import matrix_from_json
    M = matrix_from_json({"field_N": 3, "rows": [["1", 0, 0], [0, "z", 0], [0, 0, "z^2"]]})
    F = field(3)
    assert M == Matrix3.diag(1, F.zeta(1), F.zeta(2))
