from __future__ import annotations

import cmath

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gvzkit import cyclotomic as cyc
from gvzkit.cyclotomic import (
    CycInt,
    abs_square,
    conjugate,
    cyclotomic_polynomial,
    embed,
    euler_phi,
    from_multiplicities,
    integer,
    one,
    recognize,
    zero,
    zeta,
)


def test_cyclotomic_polynomial_small_values():
    assert cyclotomic_polynomial(1).coeffs == (-1, 1)
    assert cyclotomic_polynomial(2).coeffs == (1, 1)
    assert cyclotomic_polynomial(4).coeffs == (1, 0, 1)
    # (x^12 - 1) / (phi1 phi2 phi3 phi4 phi6) = x^4 - x^2 + 1
    assert cyclotomic_polynomial(12).coeffs == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("e", [1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 24, 30, 105])
def test_cyclotomic_polynomial_against_sympy(e):
    sympy = pytest.importorskip("sympy")
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(e, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(e).coeffs) == [int(c) for c in expected]


@pytest.mark.parametrize("e", [1, 2, 3, 4, 6, 8, 12, 30])
def test_cyclotomic_polynomial_divides_xe_minus_1(e):
    # multiply phi_d over all divisors d of e and compare with x^e - 1
    poly = [1]
    for d in range(1, e + 1):
        if e % d:
            continue
        q = cyclotomic_polynomial(d).coeffs
        out = [0] * (len(poly) + len(q) - 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(q):
                out[i + j] += a * b
        poly = out
    expected = [0] * (e + 1)
    expected[0], expected[e] = -1, 1
    assert poly == expected


def test_from_multiplicities_examples():
    assert from_multiplicities(3, (1, 1, 1)).is_zero
    assert from_multiplicities(4, (1, 0, 1, 0)).is_zero
    assert from_multiplicities(4, (0, 2, 0, 0)).coeffs == (0, 2)


def test_from_multiplicities_validation():
    with pytest.raises(ValueError):
        from_multiplicities(4, (1, 2, 3))
    with pytest.raises(ValueError):
        from_multiplicities(4, (1, -1, 0, 0))


def test_all_roots_sum_to_zero():
    for e in range(2, 40):
        assert from_multiplicities(e, (1,) * e).is_zero


def test_arith_examples():
    a = CycInt(4, (3, 2))
    assert (a + (-a)).is_zero
    i = zeta(4)
    assert recognize(i * i) == -1
    w = zeta(3)
    assert recognize((one(3) - w) * (one(3) - w * w)) == 3


def test_mixed_order_arithmetic_rejected():
    with pytest.raises(ValueError):
        zeta(4) + zeta(3)


def test_conjugate_examples():
    assert conjugate(integer(5, 7)) == integer(5, 7)
    assert conjugate(zeta(4)) == -zeta(4)
    # conj(zeta8) = zeta8^7 = -zeta8^3 modulo x^4 + 1
    assert conjugate(zeta(8)) == -zeta(8, 3)


def test_abs_square_examples():
    assert recognize(abs_square(integer(4, 2))) == 4
    assert recognize(abs_square(one(4) + zeta(4))) == 2
    assert abs_square(zero(6)).is_zero


def test_recognize_examples():
    assert recognize(from_multiplicities(3, (1, 1, 1))) == 0
    assert recognize(from_multiplicities(4, (3, 0, 0, 0))) == 3
    assert recognize(CycInt(4, (1, 1))) is None


def test_zeta_powers_wrap():
    assert zeta(6, 6) == one(6)
    assert zeta(6, 7) == zeta(6)


def test_embed_preserves_values():
    a = one(3) + zeta(3)
    b = embed(a, 12)
    assert b.e == 12
    assert abs(a.to_complex() - b.to_complex()) < 1e-12
    with pytest.raises(ValueError):
        embed(zeta(5), 12)


_ORDERS = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 12, 16, 30])


@st.composite
def _values(draw, e=None):
    if e is None:
        e = draw(_ORDERS)
    coeffs = draw(
        st.lists(
            st.integers(min_value=-50, max_value=50),
            min_size=euler_phi(e),
            max_size=euler_phi(e),
        )
    )
    return CycInt(e, tuple(coeffs))


@st.composite
def _value_triples(draw):
    e = draw(_ORDERS)
    return draw(_values(e)), draw(_values(e)), draw(_values(e))


@settings(max_examples=150, deadline=None)
@given(_value_triples())
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * one(a.e) == a
    assert (a + zero(a.e)) == a


@settings(max_examples=150, deadline=None)
@given(_values())
def test_conjugation_properties(a):
    assert conjugate(conjugate(a)) == a
    assert abs_square(a) == abs_square(conjugate(a))
    r = recognize(abs_square(a))
    if r is not None:
        assert r >= 0


@settings(max_examples=100, deadline=None)
@given(_values())
def test_numeric_bridge(a):
    # the canonical form evaluates to the same complex number as the raw sum
    direct = sum(
        c * cmath.exp(2j * cmath.pi * k / a.e) for k, c in enumerate(a.coeffs)
    )
    assert abs(direct - a.to_complex()) < 1e-6


@settings(max_examples=100, deadline=None)
@given(_values())
def test_abs_square_matches_complex_modulus(a):
    exact = abs_square(a).to_complex()
    approx = abs(a.to_complex()) ** 2
    assert abs(exact.real - approx) < 1e-6 * max(1.0, approx)
    assert abs(exact.imag) < 1e-6 * max(1.0, approx)


def test_serialize_roundtrip_fields():
    d = cyc.serialize(zeta(8) + integer(8, 2))
    assert d["e"] == 8 and d["coeffs"] == [2, 1, 0, 0]
    assert "approx" in d
