import random

import pytest

from pseudoreal.cyclotomic import field
from pseudoreal.errors import ZeroLeadingCoefficient
from pseudoreal.polynomial import Poly, bareiss_det, gcd, resultant
from pseudoreal.acceptance import random_element


def P(*cs, N=1):
    return Poly.over(N, cs)


def test_linear_resultant():
    assert resultant(P(-1, 1), P(-2, 1)) == -1


def test_resultant_vanishes_on_common_root():
    # (x - 1)(x - 2) and (x - 2)(x + 5)
    assert resultant(P(2, -3, 1), P(-10, 3, 1)) == 0
    assert resultant(P(2, -3, 1), P(-12, 1, 1)) != 0


def test_resultant_of_constants():
    assert resultant(P(3), P(5)) == 1
    with pytest.raises(ZeroLeadingCoefficient):
        resultant(P(), P(1, 1))


def test_divmod_and_gcd():
    a = P(2, -3, 1) * P(1, 0, 1)
    b = P(2, -3, 1) * P(4, 1)
    q, r = a.divmod(b)
    assert q * b + r == a
    assert gcd(a, b) == P(2, -3, 1)
    assert gcd(P(1, 1), P(2, 1)) == P(1)


def test_gcd_over_cyclotomic_field():
    K = field(5)
    z = K.zeta(1)
    f = Poly([-z, K.one()], K.zero())          # x - z
    g = Poly([-z * z, K.one()], K.zero())      # x - z^2
    assert gcd(f * g, f * f).coeffs == f.coeffs
    assert gcd(f, g).degree == 0


def test_derivative_and_eval():
    p = P(1, 2, 3)
    assert p.derivative() == P(2, 6)
    assert p(field(1).rational(2)) == 17


def test_bareiss_matches_cofactor():
    K = field(3)
    w = K.zeta(1)
    rows = [[1, w, 2], [w * w, 0, 1], [3, 1, w]]
    rows = [[K(x) if not isinstance(x, int) else K.rational(x) for x in r] for r in rows]
    a, b, c = rows
    cof = (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
           + a[2] * (b[0] * c[1] - b[1] * c[0]))
    assert bareiss_det(rows, K.zero(), K.one()) == cof


def _rand_poly(rng, K, deg):
    cs = [random_element(rng, K.N, 2) for _ in range(deg)] + [K.one()]
    return Poly(cs, K.zero())


def test_resultant_multiplicativity():
    rng = random.Random(11)
    K = field(12)
    for _ in range(20):
        p = _rand_poly(rng, K, rng.randint(1, 3))
        q = _rand_poly(rng, K, rng.randint(1, 3))
        r = _rand_poly(rng, K, rng.randint(1, 2))
        assert resultant(p, q * r) == resultant(p, q) * resultant(p, r)


def test_resultant_over_polynomial_ring():
    K = field(1)
    zero = Poly([], K.zero())
    Z = Poly([K.zero(), K.one()], K.zero())
    # p = X - Z, q = X^2 - 1  ->  Res_X = Z^2 - 1
    p = Poly([-Z, Poly([K.one()], K.zero())], zero)
    q = Poly([Poly([K.rational(-1)], K.zero()), zero, Poly([K.one()], K.zero())], zero)
    assert resultant(p, q) == Poly([K.rational(-1), K.zero(), K.one()], K.zero())
