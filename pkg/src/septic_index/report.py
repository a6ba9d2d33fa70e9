"""Irreducibility certificates, discrepancy classes and the per-input report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

from . import __version__
from .errors import DegenerateFactor, DegenerateInput
from .exact import Trinomial, iroot, normalize, primes_up_to, trial_factor, vp, vp_rational
from .gf import is_irreducible_prime_field
from .splitter import ENGINE_PRIMES, EngineConfig, prime_verdict
from .theorems import corollaries, theorem_verdict
from .zpoly import trinomial_poly

CERTIFIED = "CERTIFIED"
REDUCIBLE = "REDUCIBLE"
UNKNOWN = "UNKNOWN"

MOD_Q_BOUND = 200


@dataclass(frozen=True)
class Certificate:
    status: str
    method: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"status": self.status, "method": self.method, "detail": self.detail}


def rational_root(t: Trinomial) -> Optional[int]:
    """An integer root of ``x^7 + ax + b``, if any.

    A root ``r`` divides ``b`` and satisfies ``|r|^7 <= 2 max(|a r|, |b|)``.
    """
    a, b = t.a, t.b
    bound = max(2, iroot(2 * abs(a), 6) + 1, iroot(2 * abs(b), 7) + 1)
    for r in range(1, bound + 1):
        if b % r == 0:
            for s in (r, -r):
                if s**7 + a * s + b == 0:
                    return s
    return None


def eisenstein_prime(t: Trinomial) -> Optional[int]:
    g = gcd(t.a, t.b)
    if g in (0, 1):
        return None
    primes, _ = trial_factor(g)
    for q in sorted(primes):
        if t.b % (q * q):
            return q
    return None


@lru_cache(maxsize=1 << 16)
def _irreducible_mod(q: int, a: int, b: int) -> bool:
    return is_irreducible_prime_field([b, a, 0, 0, 0, 0, 0, 1], q)


def _factor_over_z(t: Trinomial):
    import sympy

    x = sympy.Symbol("x")
    _, factors = sympy.factor_list(x**7 + t.a * x + t.b, x)
    return [(sympy.Poly(g, x), m) for g, m in factors]


def certify_irreducible(t: Trinomial, exact_fallback: bool = True) -> Certificate:
    """Best-effort irreducibility certificate for ``x^7 + ax + b``."""
    if t.b == 0:
        return Certificate(REDUCIBLE, "rational-root", "x divides f")
    q = eisenstein_prime(t)
    if q is not None:
        return Certificate(CERTIFIED, "eisenstein", f"Eisenstein at {q}")
    r = rational_root(t)
    if r is not None:
        return Certificate(REDUCIBLE, "rational-root", f"f({r}) = 0")
    d = t.D
    for q in primes_up_to(MOD_Q_BOUND):
        if d % q and _irreducible_mod(q, t.a % q, t.b % q):
            return Certificate(CERTIFIED, "mod-q", f"irreducible modulo {q}")
    if not exact_fallback:
        return Certificate(UNKNOWN, "none", "no certificate found")
    factors = _factor_over_z(t)
    if len(factors) == 1 and factors[0][1] == 1:
        return Certificate(CERTIFIED, "zfactor", "no factorisation over Z")
    degs = sorted(g.degree() for g, m in factors for _ in range(m))
    return Certificate(REDUCIBLE, "zfactor", "factor degrees " + ",".join(map(str, degs)))


# ---------------------------------------------------------------------------
# discrepancy classes

# Worked examples whose stated conclusion is checked against the engine.
WORKED_EXAMPLES = {
    (17, 51): ("Example1", 3),
    (7, 56): ("Example2", 2),
}


def _corrected_rho_class(t: Trinomial) -> str:
    """Sub-family of ``a = 1 mod 4, b = 2 mod 4`` from the centre ``2^u - 7b/6a``."""
    vd = vp(t.D, 2)
    if vd % 2:
        return "4"
    u = (vd - 6) // 2
    rho = 2**u - Fraction(7 * t.b, 6 * t.a)
    w = vp_rational(Fraction(trinomial_poly(t)(rho)), 2)
    if w == 2 * u + 1:
        return "5"
    if w >= 2 * u + 3:
        return "6"
    return "5-6"


def _region_2(t: Trinomial) -> str:
    a, b = t.a, t.b
    if a % 4 == 1 and b % 4 == 2:
        return f"Thm1.1({_corrected_rho_class(t)})"
    if a % 64 == 48 and b % 128 == 64:
        return "Thm1.1(8)"
    return "Thm1.1(unlisted)"


def _region_3(t: Trinomial) -> str:
    from .theorems import three_adic_profile

    pr = three_adic_profile(t)
    if pr.a_mod == 2 and pr.v3_b == 1:
        sign_plus = pr.b3 == 1
        vb = pr.v3_bma if sign_plus else pr.v3_bpa
        base = 1 if sign_plus else 4
        if pr.v3_a7 == 2:
            return f"Thm1.2({base})"
        if 2 * pr.v3_a7 > vb + 1:
            return f"Thm1.2({base + 1})"
        # the '=' and '<' sub-cases share the last condition number of the branch
        return f"Thm1.2({base + 2})"
    return "Thm1.2(unlisted)"


def discrepancy_class(t: Trinomial, p: int, theorem_condition: Optional[str], engine_divides: bool) -> str:
    """Label of an engine/theorem disagreement at ``p``.

    A theorem-only claim is labelled by the condition it matched; an
    engine-only claim by the condition family whose hypotheses it meets.
    """
    if theorem_condition is not None and not engine_divides:
        return theorem_condition
    return _region_2(t) if p == 2 else _region_3(t)


# ---------------------------------------------------------------------------
# report


@dataclass
class Report:
    a: int
    b: int
    normalized: Trinomial
    certificate: Certificate
    primes: list = field(default_factory=list)
    corollary_tags: list = field(default_factory=list)
    example_markers: list = field(default_factory=list)

    @property
    def engine_divisors(self) -> list[int]:
        return sorted(e["p"] for e in self.primes if e["engine_divides"])

    @property
    def theorem_divisors(self) -> list[int]:
        return sorted(e["p"] for e in self.primes if e["theorem_divides"])

    @property
    def discrepancies(self) -> list[str]:
        return [e["discrepancy_class"] for e in self.primes if e["discrepancy"]]

    def to_dict(self, with_trace: bool = True) -> dict:
        primes = []
        for entry in self.primes:
            entry = dict(entry)
            if not with_trace:
                entry.pop("trace", None)
            primes.append(entry)
        return {
            "input": {"a": self.a, "b": self.b},
            "normalized": {
                "a": self.normalized.a,
                "b": self.normalized.b,
                "chain": [list(x) for x in self.normalized.chain],
            },
            "irreducibility": self.certificate.to_dict(),
            "primes": primes,
            "engine_index_divisors": self.engine_divisors,
            "theorem_index_divisors": self.theorem_divisors,
            "corollaries": self.corollary_tags,
            "example_markers": self.example_markers,
            "version": __version__,
        }

    def to_json(self, with_trace: bool = True) -> str:
        return json.dumps(self.to_dict(with_trace), sort_keys=True, indent=2)

    def to_text(self) -> str:
        t = self.normalized
        lines = [f"f = {Trinomial(self.a, self.b)}"]
        if (t.a, t.b) != (self.a, self.b):
            lines.append(f"normalized: {t}")
        lines.append(f"irreducibility: {self.certificate.status} ({self.certificate.detail})")
        for e in self.primes:
            split = "{" + ",".join(f"({x},{y})" for x, y in e["splitting"]) + "}"
            cond = e["theorem_condition"] or "-"
            flag = f"  DISCREPANCY [{e['discrepancy_class']}]" if e["discrepancy"] else ""
            lines.append(
                f"p={e['p']}: splitting {split}; engine {'divides' if e['engine_divides'] else 'does not divide'}"
                f" i(K); theorem {'divides' if e['theorem_divides'] else 'does not divide'} ({cond}){flag}"
            )
        divs = self.engine_divisors
        if divs:
            claim = f"common index divisors: {divs}; K is not monogenic"
        else:
            claim = "no common index divisor"
        if self.certificate.status != CERTIFIED:
            claim = "if f is irreducible, then " + claim
        lines.append(claim)
        if self.corollary_tags:
            lines.append("corollaries: " + ", ".join(self.corollary_tags))
        for m in self.example_markers:
            lines.append(f"{m['example']}: stated divisor {m['claimed']}, engine {'agrees' if m['agrees'] else 'disagrees'}")
        return "\n".join(lines)


def prime_entry(t: Trinomial, p: int, config: EngineConfig | None = None) -> dict:
    ev = prime_verdict(t, p, config)
    tv = theorem_verdict(t, p)
    disagree = ev.is_common_index_divisor != tv.divides
    return {
        "p": p,
        "splitting": [list(ef) for ef in ev.splitting.factors],
        "engine_divides": ev.is_common_index_divisor,
        "theorem_divides": tv.divides,
        "theorem_condition": tv.matched_condition,
        "discrepancy": disagree,
        "discrepancy_class": discrepancy_class(t, p, tv.matched_condition, ev.is_common_index_divisor)
        if disagree
        else None,
        "trace": list(ev.trace),
    }


def example_markers(a: int, b: int, engine_divisors) -> list[dict]:
    if (a, b) not in WORKED_EXAMPLES:
        return []
    name, p = WORKED_EXAMPLES[(a, b)]
    return [{"example": name, "claimed": p, "agrees": p in engine_divisors}]


def build_report(
    a: int,
    b: int,
    primes=ENGINE_PRIMES,
    config: EngineConfig | None = None,
    exact_fallback: bool = True,
) -> Report:
    """Normalise, certify and classify ``x^7 + ax + b``.

    Raises DegenerateInput for ``b = 0`` or ``D = 0`` and DegenerateFactor
    when the engine meets an exact factor.
    """
    t0 = Trinomial(a, b)
    if b == 0:
        raise DegenerateInput("b = 0: x divides f")
    if t0.D == 0:
        raise DegenerateInput("discriminant is zero")
    t = normalize(t0)
    cert = certify_irreducible(t, exact_fallback)
    report = Report(a, b, t, cert, corollary_tags=corollaries(t0))
    for p in primes:
        report.primes.append(prime_entry(t, p, config))
    report.example_markers = example_markers(a, b, report.engine_divisors)
    return report


__all__ = [
    "CERTIFIED",
    "REDUCIBLE",
    "UNKNOWN",
    "Certificate",
    "certify_irreducible",
    "rational_root",
    "eisenstein_prime",
    "discrepancy_class",
    "Report",
    "build_report",
    "prime_entry",
    "WORKED_EXAMPLES",
    "DegenerateFactor",
]
