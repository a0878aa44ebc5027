import pytest

from pseudoreal.cyclotomic import cos_2pi, field, sin_2pi
from pseudoreal.descent import (CyclicNormalForm, RealModelParams, check_real_lift, cyclic_normal_form,
                                default_params, definable_cyclic, exists_real_charpoly_lift,
                                has_real_field_of_moduli_cyclic, real_model_cyclic, real_model_dihedral,
                                verdict_cyclic, verdict_from_normal_form)
from pseudoreal.errors import (BadParameters, CriterionFailed, DegenerateParams, IdentityElement, NotFiniteOrder,
                               PreconditionFailed)
from pseudoreal.finitegroup import closure, fingerprint
from pseudoreal.projlinear import Matrix3, ProjElement, eigenratio_class, matrix_from_json


def diag(*xs, N=None):
    return ProjElement(Matrix3.diag(*xs, N=N))


def test_normal_form_validation():
    with pytest.raises(BadParameters):
        CyclicNormalForm(7, 0, 0)
    with pytest.raises(BadParameters):
        CyclicNormalForm(8, 2, 4)
    with pytest.raises(BadParameters):
        CyclicNormalForm(1, 0, 0)
    assert CyclicNormalForm(3, 0, 1).homology_flag


def test_normal_form_of_permuted_rotation():
    F5 = field(5)
    g = diag(F5.zeta(3), F5.zeta(4), F5.zeta(2))
    nf = cyclic_normal_form(g)
    # lex-min of the orbit containing (1, 4)
    assert nf.as_tuple() == (5, 1, 2)
    assert (1, 4) in eigenratio_class(g, 5)
    assert (1, 4) in eigenratio_class(CyclicNormalForm(5, 1, 2).element(), 5)


def test_normal_form_examples():
    assert cyclic_normal_form(diag(1, 1, -1)).as_tuple() == (2, 0, 1)
    F7 = field(7)
    assert cyclic_normal_form(diag(1, F7.zeta(1), F7.zeta(3))).as_tuple() == (7, 1, 3)


def test_normal_form_errors():
    with pytest.raises(IdentityElement):
        cyclic_normal_form(ProjElement(Matrix3.identity()))
    with pytest.raises(NotFiniteOrder):
        cyclic_normal_form(ProjElement(Matrix3([[1, 1, 0], [0, 1, 0], [0, 0, 1]])))


def test_moduli_always_real():
    for t in ((5, 1, 4), (3, 0, 1), (2, 0, 1)):
        assert has_real_field_of_moduli_cyclic(CyclicNormalForm(*t)) == "yes"


def test_definable_examples():
    assert definable_cyclic(CyclicNormalForm(5, 1, 4)) == (True, "a+b=0 mod n")
    ok, reason = definable_cyclic(CyclicNormalForm(3, 0, 1))
    assert not ok and "homology" in reason
    assert not definable_cyclic(CyclicNormalForm(7, 1, 3))[0]
    assert definable_cyclic(CyclicNormalForm(4, 1, 2))[0]


def test_rotation_model():
    m = real_model_cyclic(CyclicNormalForm(5, 1, 4))
    M = m.matrix.N
    c, s = cos_2pi(1, 5, M), sin_2pi(1, 5, M)
    rot = Matrix3([[1, 0, 0], [0, c, -s], [0, s, c]], M)
    assert ProjElement(m.matrix) == ProjElement(rot)
    assert m.diagnostics == []
    assert all(m.verify().values())


def test_involution_model():
    m = real_model_cyclic(CyclicNormalForm(2, 0, 1))
    assert ProjElement(m.matrix) == diag(1, 1, -1)


def test_degenerate_params():
    F = field(4)
    with pytest.raises(DegenerateParams):
        RealModelParams(F.one(), F.one())


def test_model_errors():
    with pytest.raises(CriterionFailed):
        real_model_cyclic(CyclicNormalForm(7, 1, 3))


@pytest.mark.parametrize("t", [(7, 1, 6), (12, 5, 7), (7, 3, 5), (10, 4, 7), (7, 1, 2), (11, 1, 2)])
def test_models_for_each_reduction(t):
    nf = CyclicNormalForm(*t)
    assert definable_cyclic(nf)[0]
    m = real_model_cyclic(nf)
    assert all(m.verify().values())
    assert m.matrix.is_real()


def test_model_with_other_params():
    F = field(20)
    params = RealModelParams(F.zeta(1), 1 + F.zeta(3))
    m = real_model_cyclic(CyclicNormalForm(5, 1, 2), params)
    assert all(m.verify().values())


def test_dihedral_examples():
    m = real_model_dihedral(5, 4)
    assert ProjElement(m.reflection) == diag(1, 1, -1)
    assert closure(m.generators()).order == 10
    m3 = real_model_dihedral(3, 1)
    fp = fingerprint(closure(m3.generators()))
    assert fp.order == 6 and fp.order_histogram == {1: 1, 2: 3, 3: 2}
    with pytest.raises(BadParameters):
        real_model_dihedral(6, 2)


def test_real_charpoly_lift_examples():
    F5, F3 = field(5), field(3)
    g = diag(F5.zeta(3), F5.zeta(4), F5.zeta(2))
    w = exists_real_charpoly_lift(g)
    assert w is not None and check_real_lift(g, w)
    assert exists_real_charpoly_lift(diag(1, 1, F3.zeta(1))) is None
    R = ProjElement(Matrix3([[0, 1, 0], [0, 0, 1], [1, 0, 0]]))
    w = exists_real_charpoly_lift(R)
    assert w is not None and check_real_lift(R, w)
    with pytest.raises(PreconditionFailed):
        exists_real_charpoly_lift(diag(1, 1, -1))


def test_verdict_examples():
    F5, F4 = field(5), field(4)
    v = verdict_cyclic(diag(1, F5.zeta(1), F5.zeta(4)))
    assert v.real_field_of_moduli == "yes" and v.definable_over_R == "yes"
    assert "model" in v.witness
    v = verdict_cyclic(diag(1, 1, F5.zeta(1)))
    assert v.pseudo_real and v.obstruction == "homology-period>=3"
    v = verdict_cyclic(diag(1, F4.zeta(1), F4.zeta(2)))
    assert v.definable_over_R == "yes"


def test_verdict_json_shape():
    j = verdict_from_normal_form(7, 1, 3).to_json()
    assert j["moduli"] == "yes" and j["definable"] is False and j["pseudo_real"] is True
    j = verdict_from_normal_form(5, 1, 4).to_json()
    assert j["definable"] is True and j["reason"] == "2a-b=0 mod n"


def test_witness_entries_real():
    v = verdict_from_normal_form(9, 1, 8, default_params())
    assert matrix_from_json(v.witness["model"]).is_real()
