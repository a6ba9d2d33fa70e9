import pytest
from hypothesis import assume, given, settings, strategies as st

from septic_index.errors import DegenerateFactor, DegenerateInput, IncompleteInput, Unresolved
from septic_index.exact import Trinomial, normalize
from septic_index.polygon import SplittingType
from septic_index.splitter import (
    EngineConfig,
    engine_index_divisors,
    engstrom_criterion,
    prime_verdict,
    split_poly,
    splitting_type,
)
from septic_index.zpoly import trinomial_poly

coef = st.integers(-(2**12), 2**12)
primes = st.sampled_from([2, 3, 5, 7])


def _split_or_skip(t, p):
    try:
        return splitting_type(t, p)
    except DegenerateFactor:
        assume(False)


@pytest.mark.parametrize(
    "a,b,p,expected,divides",
    [
        (7, 56, 2, ((1, 1), (1, 1), (1, 1), (1, 2), (1, 2)), True),
        (12, 32, 2, ((1, 1), (3, 2)), False),
        (28, 32, 2, ((1, 1), (3, 1), (3, 1)), True),
        (0, 3, 3, ((7, 1),), False),
        (0, 3, 2, ((1, 1), (1, 3), (1, 3)), False),
        (48, 64, 2, ((1, 1), (6, 1)), False),
        (48, 128, 2, ((1, 1), (3, 2)), False),
        (17, 51, 3, ((1, 1), (3, 1), (3, 1)), False),
    ],
)
def test_known_splittings(a, b, p, expected, divides):
    v = prime_verdict(Trinomial(a, b), p)
    assert v.splitting.factors == expected
    assert v.is_common_index_divisor is divides


def test_p3_divisor_example():
    assert prime_verdict(Trinomial(5, 3), 3).is_common_index_divisor


@settings(max_examples=200, deadline=None)
@given(coef, coef.filter(bool), primes)
def test_fundamental_equality(a, b, p):
    t = Trinomial(a, b)
    assume(t.D != 0)
    s = _split_or_skip(normalize(t), p)
    assert s.complete
    assert sum(e * f for e, f in s.factors) == 7


@settings(max_examples=150, deadline=None)
@given(coef, coef.filter(bool), primes)
def test_unramified_shortcut_matches_engine(a, b, p):
    t = Trinomial(a, b)
    assume(t.D != 0 and t.D % p != 0)
    fast = splitting_type(t, p)
    slow = split_poly(trinomial_poly(t), p)
    assert fast.factors == slow.factors
    assert all(e == 1 for e, _ in fast.factors)


@settings(max_examples=60, deadline=None)
@given(coef, coef.filter(bool), primes)
def test_engine_is_deterministic(a, b, p):
    t = Trinomial(a, b)
    assume(t.D != 0)
    s1 = _split_or_skip(t, p)
    s2 = splitting_type(t, p)
    assert s1.factors == s2.factors and s1.trace == s2.trace


def test_engstrom_counts():
    # factors are (e, f); three primes with f = 1 exceed N_2(1) = 2
    assert engstrom_criterion(SplittingType(((1, 1), (1, 1), (1, 1), (4, 1))), 2)
    assert not engstrom_criterion(SplittingType(((1, 1), (6, 1))), 2)
    assert not engstrom_criterion(SplittingType(((1, 1), (3, 2))), 2)
    assert engstrom_criterion(SplittingType(((1, 2), (1, 2), (3, 1))), 2)
    with pytest.raises(IncompleteInput):
        engstrom_criterion(SplittingType(((7, 1),), complete=False), 2)


def test_degenerate_inputs():
    with pytest.raises(DegenerateInput):
        splitting_type(Trinomial(5, 0), 2)
    # x^7 + ax + b has a repeated root exactly when D = 0
    with pytest.raises(DegenerateInput):
        splitting_type(Trinomial(-7, 6), 2)


def test_tiny_depth_surfaces_unresolved():
    with pytest.raises(Unresolved):
        splitting_type(Trinomial(28, 32), 2, EngineConfig(depth=0))


def test_engine_index_divisors():
    assert engine_index_divisors(Trinomial(7, 56)) == {2}
    assert engine_index_divisors(Trinomial(0, 3)) == set()


# independent oracle: PARI's prime decomposition (optional dependency)


def test_against_pari():
    cypari = pytest.importorskip("cypari")
    pari = cypari.pari
    pari.allocatemem(2 * 10**9)
    mismatches = []
    for a in range(-12, 13):
        for b in range(-12, 13):
            t = Trinomial(a, b)
            if b == 0 or t.D == 0:
                continue
            pol = pari(f"x^7+({a})*x+({b})")
            if len(pari.factor(pol)[0]) != 1:
                continue
            for p in (2, 3, 5, 7):
                nf = pari.nfinit([pol, [p]])
                dec = pari.idealprimedec(nf, p)
                truth = sorted(((int(P[2]), int(P[3])) for P in dec), key=lambda ef: (ef[1], ef[0]))
                got = list(splitting_type(t, p).factors)
                if got != truth:
                    mismatches.append((a, b, p, got, truth))
    assert mismatches == []
