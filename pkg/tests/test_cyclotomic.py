from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from pseudoreal.cyclotomic import (CycloElement, arith, conj, cos_2pi, cyclotomic_polynomial, element_from_json,
                                   element_to_json, embed, field, field_create, format_element, is_real,
                                   parse_element, re_im, sin_2pi, to_complex)
from pseudoreal.errors import DivisionByZero, FieldMismatch, NotASubfield, ParseError


def test_cyclotomic_polynomials():
    assert field_create(1).modulus == (-1, 1)
    assert field_create(4).modulus == (1, 0, 1)
    assert field_create(20).modulus == (1, 0, -1, 0, 1, 0, -1, 0, 1)
    assert field(20).degree == 8
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_conductor_zero_rejected():
    with pytest.raises(ValueError):
        field_create(0)


def test_phi_divides_x_n_minus_1():
    for N in range(1, 40):
        F = field(N)
        # zeta has multiplicative order exactly N in the quotient ring
        assert F.zeta(1) ** N == 1
        assert all(F.zeta(1) ** k != 1 for k in range(1, N))


def test_basic_arith():
    F3 = field(3)
    assert F3.zeta(1) * F3.zeta(2) == 1
    F4 = field(4)
    x = 1 + F4.zeta(1)
    assert x / x == 1
    F5 = field(5)
    z = F5.zeta
    assert (1 + z(1) + z(2) + z(3) + z(4)).is_zero()
    assert 1 + z(1) + z(2) == -z(3) - z(4)


def test_arith_op_names():
    F = field(7)
    x, y = F.zeta(1), F.zeta(3)
    assert arith(x, y, "add") == x + y
    assert arith(x, y, "sub") == x - y
    assert arith(x, y, "mul") == F.zeta(4)
    assert arith(x, y, "div") == F.zeta(5)


def test_division_by_zero():
    F = field(5)
    with pytest.raises(DivisionByZero):
        F.one() / F.zero()
    with pytest.raises(ZeroDivisionError):
        F.zero().inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        arith(field(3).zeta(1), field(5).zeta(1), "add")


def test_embed_examples():
    assert embed(field(2).zeta(1), 4) == field(4).zeta(2)
    assert embed(field(2).zeta(1), 4) == -1
    assert embed(field(1).one(), 20) == field(20).one()
    assert embed(field(5).zeta(1), 20).nums == field(20).zeta(4).nums
    with pytest.raises(NotASubfield):
        embed(field(5).zeta(1), 12)


def test_cross_field_equality():
    assert field(5).zeta(1) == field(20).zeta(4)
    assert field(3).zeta(1) != field(4).zeta(1)
    assert hash(field(5).zeta(2)) == hash(field(20).zeta(8))


def test_restrict_roundtrip():
    x = parse_element("1/2*z^3-2", 5)
    assert embed(x, 20).restrict(5) == x
    with pytest.raises(NotASubfield):
        field(20).zeta(1).restrict(5)


def test_conj_examples():
    F4, F5 = field(4), field(5)
    assert conj(F4.zeta(1)) == -F4.zeta(1)
    assert conj(F5.rational(Fraction(3, 7))) == Fraction(3, 7)
    w = F5.zeta(1) + F5.zeta(4)
    assert conj(w) == w


def test_is_real_examples():
    F20 = field(20)
    assert not is_real(field(4).zeta(1))
    assert is_real(field(5).zeta(1) + field(5).zeta(4))
    z5 = F20.root_of_unity(5)
    assert is_real((z5 - z5.inverse()) / F20.i())


def test_re_im_examples():
    re, im = re_im(field(4).zeta(1))
    assert re == 0 and im == 1
    re, im = re_im(field(1).rational(3))
    assert re == 3 and im == 0
    re, im = re_im(field(20).root_of_unity(5))
    assert is_real(re) and is_real(im)
    assert abs(float(to_complex(re).real) - 0.309017) < 1e-6
    assert abs(float(to_complex(im).real) - 0.951057) < 1e-6


def test_to_complex_examples():
    assert complex(to_complex(field(1).one())) == 1
    assert abs(complex(to_complex(field(4).zeta(1))) - 1j) < 1e-30
    w = complex(to_complex(field(3).zeta(1)))
    assert abs(w - complex(-0.5, 0.8660254037844386)) < 1e-15


def test_to_complex_precision_floor():
    with pytest.raises(ValueError):
        field(3).zeta(1).to_complex(precision=20)


def test_trig_helpers():
    c, s = cos_2pi(1, 5, 20), sin_2pi(1, 5, 20)
    assert c * c + s * s == 1
    assert abs(float(to_complex(c).real) - 0.30901699) < 1e-8


def test_parse_and_format():
    x = parse_element("1/2*z^3-2", 5)
    assert x == field(5).zeta(3) * Fraction(1, 2) - 2
    assert parse_element("z^-1", 7) == field(7).zeta(6)
    assert parse_element("i", 4) == field(4).i()
    assert parse_element(format_element(x), 5) == x
    with pytest.raises(ParseError):
        parse_element("z^^2", 5)
    with pytest.raises(ParseError):
        parse_element("i", 5)


def test_json_roundtrip():
    x = parse_element("3/4*z^7 - z + 5", 20)
    obj = element_to_json(x)
    assert obj["N"] == 20 and len(obj["coeffs"]) == 8
    assert element_from_json(obj) == x
    with pytest.raises(ParseError):
        element_from_json({"N": 5, "coeffs": ["1"]})


conductors = st.sampled_from([1, 3, 4, 5, 7, 8, 12, 15, 20])


@st.composite
def elements(draw, N=None):
    N = N or draw(conductors)
    F = field(N)
    cs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                       min_size=F.degree, max_size=F.degree))
    return F.from_coeffs(cs)


@st.composite
def triples(draw):
    N = draw(conductors)
    return draw(elements(N)), draw(elements(N)), draw(elements(N))


@settings(max_examples=80, deadline=None)
@given(triples())
def test_ring_laws(t):
    x, y, z = t
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if not x.is_zero():
        assert x * x.inverse() == 1


@settings(max_examples=80, deadline=None)
@given(triples())
def test_conj_is_field_automorphism(t):
    x, y, _ = t
    assert conj(conj(x)) == x
    assert conj(x * y) == conj(x) * conj(y)
    assert conj(x + y) == conj(x) + conj(y)


@settings(max_examples=60, deadline=None)
@given(elements())
def test_conj_matches_numeric(x):
    with mpmath.workprec(128):
        d = abs(to_complex(conj(x)) - mpmath.conj(to_complex(x)))
    assert d < mpmath.mpf(2) ** -64


@settings(max_examples=60, deadline=None)
@given(elements())
def test_re_im_decomposition(x):
    re, im = re_im(x)
    M = re.N
    assert is_real(re) and is_real(im)
    assert re + field(M).i() * im == x


def test_unique_representation():
    F = field(12)
    a = F.from_coeffs([0, 0, 0, 0, 1])  # z^4 reduces
    b = F.zeta(4)
    assert a.nums == b.nums and a.den == b.den
    assert CycloElement(12, [0, 0, 0, 0, 1]) == b
