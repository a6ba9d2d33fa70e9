from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st

from septic_index.errors import DegenerateInput
from septic_index.exact import count_monic_irreducibles
from septic_index.gf import (
    F4,
    GFContext,
    GFPoly,
    enumerate_monic_irreducibles,
    factor,
    factor_trial,
    is_irreducible_prime_field,
    is_separable,
    prime_field,
    reduce_int_poly,
)

CONTEXTS = [prime_field(2), prime_field(3), prime_field(5), prime_field(7), F4, GFContext(3, (2, 2, 1)), GFContext(2, (1, 1, 0, 1))]


def _poly(ctx, draw_coeffs):
    return GFPoly(ctx, tuple(c % ctx.q for c in draw_coeffs) + (1,))


def test_f4_field_axioms():
    for x in range(1, 4):
        assert F4.mul(x, F4.inv(x)) == 1
    # x^2 = x + 1 in F_4 = F_2[x]/(x^2+x+1)
    x = F4.elem([0, 1])
    assert F4.mul(x, x) == F4.elem([1, 1])
    assert F4.power(x, 3) == 1


@pytest.mark.parametrize("ctx", CONTEXTS, ids=lambda c: f"F{c.q}")
def test_field_inverses(ctx):
    for x in range(1, ctx.q):
        assert ctx.mul(x, ctx.inv(x)) == 1
        assert ctx.add(x, ctx.neg(x)) == 0


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(CONTEXTS), st.lists(st.integers(0, 10**6), min_size=0, max_size=7))
def test_berlekamp_matches_trial_division(ctx, coeffs):
    f = _poly(ctx, coeffs)
    fast = factor(f)
    slow = factor_trial(f)
    assert fast == slow
    product = reduce(lambda u, v: u * v, (g**m for g, m in fast), GFPoly(ctx, (1,)))
    assert product == f
    assert all(g.is_monic() for g, _ in fast)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CONTEXTS), st.lists(st.integers(0, 10**6), min_size=1, max_size=6))
def test_separable_iff_squarefree_factorisation(ctx, coeffs):
    f = _poly(ctx, coeffs)
    assert is_separable(f) == all(m == 1 for _, m in factor(f))


@pytest.mark.parametrize("p,h", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (5, 2), (7, 1), (7, 2)])
def test_enumeration_matches_necklace_count(p, h):
    irr = enumerate_monic_irreducibles(p, h)
    assert len(irr) == count_monic_irreducibles(p, h)
    assert all(len(factor(g)) == 1 and factor(g)[0][1] == 1 for g in irr)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 11, 13, 199]), st.lists(st.integers(0, 10**6), min_size=1, max_size=7))
def test_rabin_matches_factorisation(q, coeffs):
    c = [x % q for x in coeffs] + [1]
    fs = factor(GFPoly(prime_field(q), tuple(c)))
    assert is_irreducible_prime_field(c, q) == (len(fs) == 1 and fs[0][1] == 1)


def test_known_factorisations():
    f2 = prime_field(2)
    # x^7 + 1 = (x+1)(x^3+x+1)(x^3+x^2+1) over F_2
    f = reduce_int_poly(f2, [1, 0, 0, 0, 0, 0, 0, 1])
    assert sorted(g.degree for g, _ in factor(f)) == [1, 3, 3]
    # Y^2 + xY + 1 is irreducible over F_4
    g = GFPoly(F4, (1, F4.elem([0, 1]), 1))
    assert [(h.degree, m) for h, m in factor(g)] == [(2, 1)]


def test_zero_polynomial_rejected():
    with pytest.raises(DegenerateInput):
        factor(GFPoly(prime_field(3), ()))
