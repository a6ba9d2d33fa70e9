"""Fixture table run by ``septic-index selftest``.

Each fixture is either an ordinary check or an expected-discrepancy check;
the latter passes when the stated claim is contradicted in the known way.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact import Trinomial, count_monic_irreducibles, vp, vp_rational
from .gf import GFPoly, enumerate_monic_irreducibles, factor, prime_field
from .order2 import make_data, polygon2, residual2
from .polygon import build_polygon, residual_polynomial
from .report import build_report
from .splitter import engine_index_divisors, engstrom_criterion, splitting_type
from .zpoly import QPoly, discriminant_via_resultant, trinomial_poly

CHECK = "check"
EXPECTED_DISCREPANCY = "expected-discrepancy"


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    run: Callable[[], tuple[bool, str]]


def _split(a, b, p):
    return list(splitting_type(Trinomial(a, b), p).factors)


def _residual_degrees(a, b, phi, p, slope=None):
    f = trinomial_poly(Trinomial(a, b))
    np = build_polygon(f, QPoly(phi), p)
    out = []
    for edge in np.positive_edges():
        if slope is None or edge.slope == slope:
            res = residual_polynomial(f, np, edge).residual
            out.append((res.format(), sorted(u.degree for u, m in factor(res) for _ in range(m))))
    return out


def _example2():
    r = build_report(7, 56)
    ok = (
        r.engine_divisors == [2]
        and r.primes[0]["theorem_condition"] == "Thm1.1(1)"
        and r.certificate.method == "eisenstein"
        and "7" in r.certificate.detail
        and not r.discrepancies
    )
    return ok, f"engine {r.engine_divisors}, {r.primes[0]['theorem_condition']}, {r.certificate.detail}"


def _remark():
    r3, r5 = build_report(0, 3), build_report(0, 5)
    s = _split(0, 3, 2)
    ok = (
        r3.engine_divisors == []
        and r5.engine_divisors == []
        and "index-one-remark" in r3.corollary_tags
        and "index-one-remark" in r5.corollary_tags
        and s == [(1, 1), (1, 3), (1, 3)]
    )
    return ok, f"engine {r3.engine_divisors}/{r5.engine_divisors}, split(0,3,2) = {s}"


def _residual_34():
    (res, degs), = _residual_degrees(3, 4, (1, 1, 1), 2)
    return degs == [2], f"{res} over F4, factor degrees {degs}"


def _residual_38():
    (res, degs), = _residual_degrees(3, 8, (1, 1, 1), 2)
    return degs == [1, 1], f"{res} over F4, factor degrees {degs}"


def _residual_864():
    (res, degs), = _residual_degrees(8, 64, (0, 1), 2, Fraction(1, 2))
    return degs == [1, 2], f"{res}, factor degrees {degs}"


def _order2_1232():
    s = _split(12, 32, 2)
    f = trinomial_poly(Trinomial(12, 32))
    data = make_data(2, 1, 3, GFPoly(prime_field(2), (1, 1)))
    poly = polygon2(f, data)
    (edge,) = poly.positive_edges()
    res = residual2(f, data, edge, poly)
    ok = s == [(1, 1), (3, 2)] and res.format() == "Y^2+Y+1"
    return ok, f"split {s}, second-order residual {res.format()}"


def _order2_2832():
    t = Trinomial(28, 32)
    st = splitting_type(t, 2)
    ok = list(st.factors) == [(1, 1), (3, 1), (3, 1)] and engstrom_criterion(st, 2)
    return ok, f"split {list(st.factors)}, engine 2 | i(K): {engstrom_criterion(st, 2)}"


def _example1():
    r = build_report(17, 51)
    (marker,) = r.example_markers
    present = not marker["agrees"] and 3 not in r.engine_divisors
    return present, f"stated 3 | i(K); engine divisors {r.engine_divisors}; a = 17 = 8 mod 9"


def _identity_pairs(n=200, seed=0):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        a = rng.randrange(-(10**6), 10**6) | 1
        b = rng.randrange(-(10**6), 10**6)
        if b:
            out.append((a, b))
    return out


def _identity_stated():
    # the stated form: 6^7 a^7 f(mu) + D b = 0 and 6^6 a^6 f'(mu) - D = 0
    bad = 0
    for a, b in _identity_pairs():
        t = Trinomial(a, b)
        f = trinomial_poly(t)
        mu = Fraction(-7 * b, 6 * a)
        if 6**7 * a**7 * f(mu) + t.D * b != 0 or 6**6 * a**6 * f.derivative()(mu) - t.D != 0:
            bad += 1
    return bad > 0, f"stated sign fails on {bad}/200 pairs"


def _identity_corrected():
    bad = 0
    for a, b in _identity_pairs():
        t = Trinomial(a, b)
        f = trinomial_poly(t)
        mu = Fraction(-7 * b, 6 * a)
        if 6**7 * a**7 * f(mu) != t.D * b or 6**6 * a**6 * f.derivative()(mu) != -t.D:
            bad += 1
    return bad == 0, "6^7 a^7 f(mu) = D b and 6^6 a^6 f'(mu) = -D on 200 pairs"


def _mu_valuation():
    rng = random.Random(1)
    bad = 0
    for _ in range(200):
        a, b = 4 * rng.randrange(-(10**5), 10**5) + 1, 4 * rng.randrange(-(10**5), 10**5) + 2
        t = Trinomial(a, b)
        w = vp_rational(Fraction(trinomial_poly(t)(Fraction(-7 * b, 6 * a))), 2)
        if not (w == vp(t.D, 2) - 6 and w >= 1):
            bad += 1
    return bad == 0, f"v2(f(mu)) = v2(D) - 6 >= 1 failed on {bad}/200"


def _rho_pairs():
    rng = random.Random(2)
    while True:
        a, b = 4 * rng.randrange(-(10**5), 10**5) + 1, 4 * rng.randrange(-(10**5), 10**5) + 2
        vd = vp(Trinomial(a, b).D, 2)
        if vd % 2 == 0:
            yield a, b, (vd - 6) // 2


def _rho_check(sign):
    gen = _rho_pairs()
    bad = 0
    for _ in range(100):
        a, b, u = next(gen)
        f = trinomial_poly(Trinomial(a, b))
        rho = 2**u + sign * Fraction(7 * b, 6 * a)
        if not (vp_rational(Fraction(f(rho)), 2) >= 2 * u + 1 and vp_rational(Fraction(f.derivative()(rho)), 2) == u + 1):
            bad += 1
    return bad


def _rho_stated():
    bad = _rho_check(+1)
    return bad > 0, f"rho = 2^u + 7b/6a misses v2(f(rho)) >= 2u+1 on {bad}/100"


def _rho_corrected():
    bad = _rho_check(-1)
    return bad == 0, f"rho = 2^u - 7b/6a: v2 bounds failed on {bad}/100"


def _index_one():
    hits = []
    for a, b in [(15, 84), (87, 12), (15, 156), (-57, 84), (159, 228)]:
        r = build_report(a, b)
        if r.certificate.status == "CERTIFIED" and r.engine_divisors:
            hits.append((a, b))
    return not hits, f"pairs with a divisor: {hits}"


def _theorem13():
    hits = []
    for a in range(-20, 21):
        for b in range(-20, 21):
            t = Trinomial(a, b)
            if b == 0 or t.D == 0:
                continue
            for p in (5, 7):
                try:
                    if engstrom_criterion(splitting_type(t, p), p):
                        hits.append((a, b, p))
                except Exception:  # reducible inputs may expose exact factors
                    pass
    return not hits, f"5 or 7 dividing i(K): {hits}"


def _counts():
    table = {(2, 1): 2, (2, 2): 1, (2, 3): 2, (3, 1): 3, (3, 2): 3, (7, 1): 7}
    ok = all(count_monic_irreducibles(p, h) == n == len(enumerate_monic_irreducibles(p, h)) for (p, h), n in table.items())
    return ok, "N_p(h) against enumeration"


def _discriminant():
    rng = random.Random(3)
    ok = all(
        discriminant_via_resultant(t) == t.D
        for t in (Trinomial(rng.randint(-1000, 1000), rng.randint(-1000, 1000)) for _ in range(50))
    )
    return ok, "closed form against the resultant"


def _engine_sets():
    got = {k: sorted(engine_index_divisors(Trinomial(*k))) for k in [(7, 56), (0, 3), (5, 2)]}
    ok = got[(7, 56)] == [2] and got[(0, 3)] == []
    return ok, str(got)


FIXTURES = [
    Fixture("x^7+7x+56 non-monogenic", CHECK, _example2),
    Fixture("a=0, b odd has index one", CHECK, _remark),
    Fixture("residual (3,4): irreducible quadratic over F4", CHECK, _residual_34),
    Fixture("residual (3,8): two distinct linears over F4", CHECK, _residual_38),
    Fixture("residual (8,64): (Y+1)(Y^2+Y+1)", CHECK, _residual_864),
    Fixture("second order (12,32): {(1,1),(3,2)}", CHECK, _order2_1232),
    Fixture("second order (28,32): {(1,1),(3,1),(3,1)}", CHECK, _order2_2832),
    Fixture("(17,51) Example-1 discrepancy present", EXPECTED_DISCREPANCY, _example1),
    Fixture("identity 6^7a^7f(mu)+Db=0 as stated", EXPECTED_DISCREPANCY, _identity_stated),
    Fixture("identity 6^7a^7f(mu)=Db, 6^6a^6f'(mu)=-D", CHECK, _identity_corrected),
    Fixture("v2(f(mu)) = v2(D)-6 >= 1", CHECK, _mu_valuation),
    Fixture("rho = 2^u + 7b/6a bounds as stated", EXPECTED_DISCREPANCY, _rho_stated),
    Fixture("rho = 2^u - 7b/6a bounds", CHECK, _rho_corrected),
    Fixture("a=15, b=12 mod 72 has no index divisor", CHECK, _index_one),
    Fixture("5 and 7 never divide i(K) on [-20,20]^2", CHECK, _theorem13),
    Fixture("monic irreducible counts", CHECK, _counts),
    Fixture("discriminant formula", CHECK, _discriminant),
    Fixture("engine index divisor sets", CHECK, _engine_sets),
]


def run_selftest(out=print) -> int:
    failures = 0
    width = max(len(f.name) for f in FIXTURES)
    for fx in FIXTURES:
        try:
            ok, detail = fx.run()
        except Exception as exc:  # a crash is a failure, reported inline
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        tag = "PASS" if ok else "FAIL"
        if fx.kind == EXPECTED_DISCREPANCY:
            tag += " (expected discrepancy)" if ok else " (discrepancy missing)"
        out(f"{fx.name:<{width}}  {tag}  {detail}")
        failures += not ok
    out(f"{len(FIXTURES) - failures}/{len(FIXTURES)} fixtures passed")
    return 0 if failures == 0 else 1
