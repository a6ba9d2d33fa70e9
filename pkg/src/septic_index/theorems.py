"""Closed-form congruence classifiers for 2, 3 and p >= 5.

These predicates are evaluated exactly as stated, independently of the
splitting engine, so that the two can be compared case by case.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InvalidPrime
from .exact import INFINITY, Trinomial, Valuation, is_finite, vp, vp_rational
from .zpoly import trinomial_poly


@dataclass(frozen=True)
class TwoAdicProfile:
    a_mod: int
    b_mod: int
    v2_D: Valuation
    u: Optional[int] = None
    rho: Optional[Fraction] = None
    v2_f_rho: Optional[Valuation] = None

    def to_dict(self) -> dict:
        return {k: (None if v is None else str(v)) for k, v in asdict(self).items()}


def _unit_mod3(n: int) -> Optional[int]:
    """``n / 3^v3(n)`` reduced to ``{1, -1}``; None for zero."""
    if n == 0:
        return None
    m = n // 3 ** vp(n, 3)
    return 1 if m % 3 == 1 else -1


@dataclass(frozen=True)
class ThreeAdicProfile:
    a_mod: int
    v3_b: Valuation
    b3: Optional[int]
    v3_a1: Valuation
    a1_3: Optional[int]
    v3_a7: Valuation
    v3_bma: Valuation
    bma_3: Optional[int]
    v3_bpa: Valuation
    bpa_3: Optional[int]

    def to_dict(self) -> dict:
        return {k: (None if v is None else str(v)) for k, v in asdict(self).items()}


Profile = Union[TwoAdicProfile, ThreeAdicProfile, None]


@dataclass(frozen=True)
class TheoremVerdict:
    p: int
    divides: bool
    matched_condition: Optional[str] = None
    profile: Profile = None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "divides": self.divides,
            "condition": self.matched_condition,
            "profile": self.profile.to_dict() if self.profile is not None else None,
        }


def two_adic_profile(t: Trinomial) -> TwoAdicProfile:
    a, b = t.a, t.b
    v2d = vp(t.D, 2)
    u = rho = vfr = None
    if is_finite(v2d) and v2d % 2 == 0 and v2d >= 6 and a != 0:
        u = (v2d - 6) // 2
        rho = 2**u + Fraction(7 * b, 6 * a)
        vfr = vp_rational(Fraction(trinomial_poly(t)(rho)), 2)
    return TwoAdicProfile(a % 128, b % 128, v2d, u, rho, vfr)


def three_adic_profile(t: Trinomial) -> ThreeAdicProfile:
    a, b = t.a, t.b
    return ThreeAdicProfile(
        a_mod=a % 9,
        v3_b=vp(b, 3),
        b3=_unit_mod3(b),
        v3_a1=vp(a + 1, 3),
        a1_3=_unit_mod3(a + 1),
        v3_a7=vp(a + 7, 3),
        v3_bma=vp(b - a - 1, 3),
        bma_3=_unit_mod3(b - a - 1),
        v3_bpa=vp(b + a + 1, 3),
        bpa_3=_unit_mod3(b + a + 1),
    )


def _two_conditions(pr: TwoAdicProfile):
    a, b = pr.a_mod, pr.b_mod
    v2d = pr.v2_D
    odd_d = is_finite(v2d) and v2d % 2 == 1
    even_d = is_finite(v2d) and v2d % 2 == 0
    has_rho = pr.v2_f_rho is not None
    yield 1, a % 4 == 3 and b % 8 == 0
    yield 2, a % 8 == 3 and b % 8 == 4
    yield 3, a % 4 == 1 and b % 4 == 0
    yield 4, a % 4 == 1 and b % 4 == 2 and odd_d
    yield 5, a % 4 == 1 and b % 4 == 2 and even_d and has_rho and pr.v2_f_rho == 2 * pr.u + 1
    yield 6, a % 4 == 1 and b % 4 == 2 and even_d and has_rho and pr.v2_f_rho >= 2 * pr.u + 3
    yield 7, a % 32 == 28 and b % 32 == 0
    yield 8, a % 64 == 48 and b % 128 == 0


def thm_2_divides(t: Trinomial) -> TheoremVerdict:
    pr = two_adic_profile(t)
    for k, hit in _two_conditions(pr):
        if hit:
            return TheoremVerdict(2, True, f"Thm1.1({k})", pr)
    return TheoremVerdict(2, False, None, pr)


def _three_conditions(pr: ThreeAdicProfile):
    base = pr.a_mod == 2 and pr.v3_b == 1
    plus = base and pr.b3 == 1
    minus = base and pr.b3 == -1
    va7, vbm, vbp = pr.v3_a7, pr.v3_bma, pr.v3_bpa
    yield 1, plus and va7 == 2 and vbm >= 3
    yield 2, plus and va7 >= 3 and vbm >= 3 and 2 * va7 > vbm + 1 and pr.bma_3 == -1
    yield 3, plus and va7 >= 3 and vbm >= 3 and 2 * va7 < vbm + 1
    yield 4, minus and va7 == 2 and vbp >= 3
    yield 5, minus and va7 >= 3 and vbp >= 3 and 2 * va7 > vbp + 1 and pr.bpa_3 == -1
    yield 6, minus and va7 >= 3 and vbp >= 3 and 2 * va7 == vbp + 1
    yield 7, pr.a_mod == 5 and pr.v3_b == 1
    # (a+1)_3 is undefined for a = -1; neither sign class can then hold
    high = pr.v3_a1 > 1 and pr.v3_b > 1 and pr.a1_3 is not None
    yield 8, high and (pr.a1_3, pr.b3) in {(-1, 1), (1, -1)}
    yield 9, high and (pr.a1_3, pr.b3) in {(-1, -1), (1, 1)}


def thm_3_divides(t: Trinomial) -> TheoremVerdict:
    pr = three_adic_profile(t)
    for k, hit in _three_conditions(pr):
        if hit:
            return TheoremVerdict(3, True, f"Thm1.2({k})", pr)
    return TheoremVerdict(3, False, None, pr)


def thm_p_ge5(p: int) -> TheoremVerdict:
    if p < 5:
        raise InvalidPrime(f"p = {p} is below 5")
    return TheoremVerdict(p, False, None, None)


def theorem_verdict(t: Trinomial, p: int) -> TheoremVerdict:
    if p == 2:
        return thm_2_divides(t)
    if p == 3:
        return thm_3_divides(t)
    return thm_p_ge5(p)


def theorem_index_divisors(t: Trinomial) -> set[int]:
    return {v.p for v in (thm_2_divides(t), thm_3_divides(t)) if v.divides}


COROLLARY_TAGS = {
    "nonmonogenic-2adic": "8 | a+1 or 8 | a-1, and 8 | b",
    "nonmonogenic-2adic-32": "32 | a+4 and 32 | b",
    "nonmonogenic-2adic-128": "128 | a+16 and 128 | b",
    "nonmonogenic-3adic": "a = 5 mod 9 and b = 3 or 6 mod 9",
    "index-one": "a = 15 mod 72 and b = 12 mod 72",
    "index-one-remark": "a = 0 and b odd",
}


def corollaries(t: Trinomial) -> list[str]:
    """Every applicable corollary tag (see ``COROLLARY_TAGS``)."""
    a, b = t.a, t.b
    tags = []
    if b % 8 == 0 and (a % 8 == 7 or a % 8 == 1):
        tags.append("nonmonogenic-2adic")
    if (a + 4) % 32 == 0 and b % 32 == 0:
        tags.append("nonmonogenic-2adic-32")
    if (a + 16) % 128 == 0 and b % 128 == 0:
        tags.append("nonmonogenic-2adic-128")
    if a % 9 == 5 and b % 9 in (3, 6):
        tags.append("nonmonogenic-3adic")
    if a % 72 == 15 and b % 72 == 12:
        tags.append("index-one")
    if a == 0 and b % 2 == 1:
        tags.append("index-one-remark")
    return tags


__all__ = [
    "INFINITY",
    "TwoAdicProfile",
    "ThreeAdicProfile",
    "TheoremVerdict",
    "two_adic_profile",
    "three_adic_profile",
    "thm_2_divides",
    "thm_3_divides",
    "thm_p_ge5",
    "theorem_verdict",
    "theorem_index_divisors",
    "corollaries",
    "COROLLARY_TAGS",
]
