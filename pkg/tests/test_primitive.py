import pytest

from pseudoreal.errors import NoGenerators, OrderNotFound
from pseudoreal.finitegroup import closure, fingerprint, sigma_image
from pseudoreal.primitive import (_bare_entry, a5_generators, catalog, catalog_entry, moduli_check,
                                  printed_c_matrix, pseudo_real_check, real_model_a5)
from pseudoreal.projlinear import Matrix3, ProjElement, proj_order


def test_hessian_orders(hess216, hess72, hess36):
    assert (hess216.order, hess72.order, hess36.order) == (216, 72, 36)
    assert fingerprint(hess216).order_histogram == {1: 1, 2: 9, 3: 80, 4: 54, 6: 72}
    assert hess36.is_subset_of(hess72) and hess72.is_subset_of(hess216)


def test_a5(a5):
    assert a5.order == 60
    assert fingerprint(a5).order_histogram == {1: 1, 2: 15, 3: 20, 5: 24}
    C = a5_generators()["C"]
    assert proj_order(C, 60) <= 60


def test_literal_c_has_infinite_order():
    # the matrix with first row (2, 2, 2) is not of finite order
    with pytest.raises(OrderNotFound):
        proj_order(ProjElement(printed_c_matrix()), 360)


def test_moduli_checks():
    m = moduli_check(_bare_entry("Hess216"))
    assert (m.status, m.mode) == ("yes", "computed")
    m = moduli_check(_bare_entry("Hess72"))
    assert m.status == "yes" and m.witness is not None
    m = moduli_check(_bare_entry("A6"))
    assert (m.status, m.mode) == ("yes", "literature")


def test_hess72_witness_conjugates(hess216, hess72):
    psi = moduli_check(_bare_entry("Hess72")).witness
    assert psi in hess216
    K = sigma_image(hess72)
    assert all(K.contains_any_field(h.conjugate_by(psi)) for h in hess72)


def test_pseudo_real_checks():
    v = pseudo_real_check(_bare_entry("Hess36"))
    assert v.pseudo_real and v.obstruction == "C3xC3-rule"
    v = pseudo_real_check(_bare_entry("PSL27"))
    assert v.pseudo_real and v.details["obstructions"][0]["normal_form"] == [7, 1, 3]
    v = pseudo_real_check(_bare_entry("A5"))
    assert v.definable_over_R == "yes"
    with pytest.raises(NoGenerators):
        pseudo_real_check(_bare_entry("A6"))


def test_a5_real_model():
    m = real_model_a5()
    assert all(M.is_real() for M in (m.A, m.B, m.C))
    assert ProjElement(m.B) == ProjElement(Matrix3.diag(1, 1, -1))
    G = closure(m.generators())
    assert G.order == 60
    assert fingerprint(G).order_histogram == {1: 1, 2: 15, 3: 20, 5: 24}


def test_catalog():
    rows = {e.name: e.row() for e in catalog()}
    assert len(rows) == 6
    assert rows["A5"]["definable"] == "yes" and not rows["A5"]["pseudo_real"]
    for name in ("Hess216", "Hess72", "Hess36", "A6", "PSL27"):
        assert rows[name]["pseudo_real"], name
    assert rows["A6"]["mode"] == "rule-based"
    assert catalog_entry("hess216").expected_order == 216


def test_catalog_orders_match_closures():
    for e in catalog():
        if e.generators is not None:
            assert closure(e.generators).order == e.expected_order
