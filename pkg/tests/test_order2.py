from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from septic_index.errors import UnsupportedPsi
from septic_index.exact import Trinomial
from septic_index.gf import GFPoly, factor, prime_field
from septic_index.order2 import (
    check_key,
    key_polynomial,
    make_data,
    monomial_denominator,
    order2_split,
    polygon2,
    residual2,
    v2nd,
)
from septic_index.splitter import splitting_type
from septic_index.zpoly import QPoly, phi_expand, trinomial_poly

F2 = prime_field(2)
F3 = prime_field(3)


def _data(p, l, e, delta=1):
    return make_data(p, l, e, GFPoly(prime_field(p), (delta, 1)))


coeffs = st.lists(st.integers(-200, 200), min_size=1, max_size=6).map(lambda c: QPoly(tuple(c)))
shapes = st.sampled_from([(2, 1, 3), (2, 2, 3), (2, 1, 2), (3, 1, 2), (3, 2, 3), (5, 1, 2)])


@settings(max_examples=150, deadline=None)
@given(shapes, coeffs, coeffs)
def test_second_order_valuation_is_multiplicative(shape, g, h):
    data = _data(*shape)
    assert v2nd(data, g * h) == v2nd(data, g) + v2nd(data, h)


@given(shapes)
def test_generated_keys_satisfy_key_properties(shape):
    data = _data(*shape)
    assert check_key(data)
    assert v2nd(data, data.key) == data.e * data.l


def test_key_rejects_nonlinear_psi():
    with pytest.raises(UnsupportedPsi):
        key_polynomial(2, 1, 3, GFPoly(F2, (1, 1, 1)))


def test_bad_key_fails_check():
    data = _data(2, 1, 3).with_key(QPoly((1, 0, 0, 1)))
    assert not check_key(data)


def test_monomial_denominator_value():
    data = _data(2, 1, 3)
    pg = polygon2(trinomial_poly(Trinomial(12, 32)), data)
    (edge,) = pg.positive_edges()
    alpha, beta = monomial_denominator(data, edge)
    assert beta < data.e
    assert data.e * alpha + data.l * beta == edge.e * data.v_key + edge.l


def test_second_order_12_32():
    f = trinomial_poly(Trinomial(12, 32))
    data = _data(2, 1, 3)
    pg = polygon2(f, data)
    (edge,) = pg.positive_edges()
    assert edge.length == 2
    res = residual2(f, data, edge, pg)
    assert res.format() == "Y^2+Y+1"
    assert [(w.degree, m) for w, m in factor(res)] == [(2, 1)]
    assert sorted(order2_split(f, data, 2)) == [(3, 2)]


def test_second_order_28_32_splits_into_two_primes():
    s = splitting_type(Trinomial(28, 32), 2)
    assert s.factors == ((1, 1), (3, 1), (3, 1))
    assert s.complete


def test_48_64_expansion_in_x3_plus_4x_plus_4():
    # f = x Phi^2 + (-8x^2 - 8x + 16) Phi + 32 x^2 for Phi = x^3 + 4x + 4
    f = trinomial_poly(Trinomial(48, 64))
    data = _data(2, 2, 3).with_key(QPoly((4, 4, 0, 1)))
    ex = phi_expand(f, data.key)
    assert ex.coeffs[1] == QPoly((16, -8, -8))
    pg = polygon2(f, data)
    assert [pt.value for pt in pg.points] == [14, 17, 19]
    (edge,) = pg.positive_edges()
    assert edge.slope == Fraction(5, 2) and edge.length == 2
    assert residual2(f, data, edge, pg).degree == 1
    assert splitting_type(Trinomial(48, 64), 2).factors == ((1, 1), (6, 1))
