from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from septic_index.errors import DegenerateInput
from septic_index.exact import (
    INFINITY,
    Trinomial,
    count_monic_irreducibles,
    discriminant_ab,
    iroot,
    is_prime,
    mod_rational,
    normalize,
    primes_up_to,
    trial_factor,
    unit_part,
    vp,
    vp_rational,
)

nonzero = st.integers(-(10**12), 10**12).filter(bool)


def test_vp_basic():
    assert vp(0, 2) is INFINITY
    assert vp(48, 2) == 4
    assert vp(-81, 3) == 4
    assert vp_rational(Fraction(3, 8), 2) == -3
    assert unit_part(48, 2) == 3


@given(nonzero, nonzero, st.sampled_from([2, 3, 5, 7]))
def test_vp_multiplicative(x, y, p):
    assert vp(x * y, p) == vp(x, p) + vp(y, p)
    assert vp_rational(Fraction(x, y), p) == vp(x, p) - vp(y, p)


@given(nonzero, st.sampled_from([2, 3, 5]))
def test_unit_part_is_unit(x, p):
    u = unit_part(x, p)
    assert u % p != 0
    assert u * p ** vp(x, p) == x


@given(st.integers(-1000, 1000), st.integers(1, 1000).filter(lambda d: d % 2))
def test_mod_rational_inverts_odd_denominators(n, d):
    r = mod_rational(Fraction(n, d), 64)
    assert (r * d - n) % 64 == 0


def test_discriminant_closed_form():
    assert discriminant_ab(7, 56) == -(7**7) * 56**6 - 6**6 * 7**7
    assert Trinomial(0, 3).D == -(7**7) * 3**6


def test_monic_irreducible_counts():
    table = {(2, 1): 2, (2, 2): 1, (2, 3): 2, (3, 1): 3, (3, 2): 3, (7, 1): 7, (5, 3): 40}
    for (p, h), n in table.items():
        assert count_monic_irreducibles(p, h) == n


@given(st.integers(0, 10**30), st.integers(1, 9))
def test_iroot_is_floor(n, k):
    r = iroot(n, k)
    assert r**k <= n < (r + 1) ** k


def test_normalize_strips_powers():
    t = normalize(Trinomial(2**6 * 3, 2**7 * 5))
    assert (t.a, t.b) == (3, 5)
    assert t.chain == ((2, 1),)
    t = normalize(Trinomial(6**12, 6**14 * 7))
    assert (t.a, t.b) == (1, 7)


@given(st.integers(-50, 50), nonzero.filter(lambda b: abs(b) < 10**6), st.sampled_from([2, 3, 5]), st.integers(0, 3))
def test_normalize_idempotent_and_scaling(a, b, p, k):
    t = Trinomial(a * p ** (6 * k), b * p ** (7 * k))
    n = normalize(t)
    assert normalize(n) == n
    # the discriminant scales by p^(42 k') for the removed power p^k'
    ratio = Fraction(t.D, n.D)
    removed = {q: m for q, m in n.chain}
    expected = 1
    for q, m in removed.items():
        expected *= q ** (42 * m)
    assert ratio == expected


def test_normalize_rejects_b_zero():
    with pytest.raises(DegenerateInput):
        normalize(Trinomial(3, 0))


def test_primes_and_factoring():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert all(is_prime(q) for q in primes_up_to(500))
    assert not is_prime(1) and not is_prime(91)
    assert trial_factor(2**5 * 3 * 1000003) == ({2: 5, 3: 1, 1000003: 1}, 1)
