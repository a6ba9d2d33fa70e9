"""Per-prime splitting of ``x^7 + ax + b`` and the common index divisor test."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateInput, IncompleteInput, Unresolved, UnsupportedPsi
from .exact import Trinomial, count_monic_irreducibles
from .gf import factor, prime_field, reduce_int_poly
from .order2 import Refinement, make_data, order2_split, refine_center
from .polygon import SplittingType, StuckState, analyze, lift_monic
from .zpoly import QPoly, gauss_valuation, rescale, translate, trinomial_poly

__all__ = [
    "EngineConfig",
    "PrimeVerdict",
    "StuckState",
    "splitting_type",
    "split_poly",
    "engstrom_criterion",
    "engine_index_divisors",
    "prime_verdict",
]

ENGINE_PRIMES = (2, 3, 5)


@dataclass(frozen=True)
class EngineConfig:
    """Limits for the escalation loop."""

    depth: int = 48
    refine_budget: int = 64
    key_replacements: int = 1


@dataclass(frozen=True)
class PrimeVerdict:
    p: int
    splitting: SplittingType
    is_common_index_divisor: bool
    trace: tuple = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "splitting": [list(ef) for ef in self.splitting.factors],
            "common_index_divisor": self.is_common_index_divisor,
        }


def _fmt(c) -> str:
    return str(Fraction(c))


class _Engine:
    def __init__(self, p: int, config: EngineConfig):
        self.p = p
        self.config = config
        self.trace: list = []

    def resolve(self, F: QPoly, phi: QPoly, scope: Fraction, depth: int) -> list:
        """Primes of the roots ``theta`` with ``v(phi(theta)) > scope``."""
        if depth <= 0:
            raise Unresolved(f"depth exhausted at {phi.format()}", p=self.p)
        an = analyze(F, phi, self.p, scope)
        self.trace.append(
            {
                "phi": phi.format(),
                "scope": str(scope),
                "polygon": an.polygon.to_dict(),
                "residuals": [ra.to_dict() for ra in an.residuals],
            }
        )
        primes = list(an.primes)
        if not an.stuck:
            return primes
        if len(an.stuck) == 1 and phi.degree == 1:
            st = an.stuck[0]
            if st.edge.e == 1 and st.psi.degree == 1:
                ref = self._refine(F, phi, st, scope, allow_recenter=True)
                if not ref.scoped:
                    return self.resolve(F, QPoly.linear(ref.center), scope, depth - 1)
                return primes + self.resolve(F, QPoly.linear(ref.center), ref.min_slope, depth - 1)
        for st in an.stuck:
            primes.extend(self.cluster(F, phi, st, scope, depth - 1))
        return primes

    def _refine(self, F, phi, st, scope, allow_recenter) -> Refinement:
        c = -Fraction(phi.coefficients[0])
        ref = refine_center(
            F,
            self.p,
            c,
            self.config.refine_budget,
            min_slope=scope,
            cluster=st,
            allow_recenter=allow_recenter,
        )
        self.trace.append({"refine": {"from": _fmt(c), "to": _fmt(ref.center), "method": ref.method}})
        return ref

    def cluster(self, F: QPoly, phi: QPoly, st: StuckState, scope, depth) -> list:
        p, edge, psi = self.p, st.edge, st.psi
        if edge.e == 1 and psi.degree == 1:
            if phi.degree == 1:
                ref = self._refine(F, phi, st, scope, allow_recenter=False)
                return self.resolve(F, QPoly.linear(ref.center), ref.min_slope, depth)
            # phi(theta)/p^l is congruent to the root of psi in F_p[x]/(phi)
            ctx = psi.context
            digits = ctx.digits(ctx.neg(psi.monic().coefficients[0]))
            new_phi = phi - QPoly(tuple(d * p**edge.l for d in digits))
            self.trace.append({"refine_phi": new_phi.format()})
            return self.resolve(F, new_phi, edge.slope, depth)
        if edge.e == 1:
            if phi.degree != 1:
                raise UnsupportedPsi(f"nonlinear psi {psi.format()} over a nonlinear phi")
            # theta = c + p^l y with y a root of G; psi is then a factor of G mod p
            c = -Fraction(phi.coefficients[0])
            G = rescale(F, c, Fraction(p) ** edge.l)
            G = G.scale(Fraction(1, p) ** gauss_valuation(G, p))
            new_phi = lift_monic(psi)
            self.trace.append({"rescale": {"center": _fmt(c), "scale": f"{p}^{edge.l}", "phi": new_phi.format()}})
            return self.resolve(G, new_phi, Fraction(0), depth)
        if phi.degree != 1:
            raise UnsupportedPsi(f"ramified edge over nonlinear phi {phi.format()}")
        if psi.degree != 1:
            raise UnsupportedPsi(f"second order needs a linear psi, got {psi.format()}")
        c = -Fraction(phi.coefficients[0])
        H = translate(F, c)
        data = make_data(p, edge.l, edge.e, psi)
        self.trace.append({"escalate": {"center": _fmt(c), "slope": f"{edge.l}/{edge.e}", "psi": psi.format()}})
        return order2_split(H, data, st.multiplicity, self.config.key_replacements, self.trace)


def split_poly(f: QPoly, p: int, config: EngineConfig | None = None) -> SplittingType:
    """Splitting type of ``p`` in the order defined by a monic separable ``f``."""
    config = config or EngineConfig()
    engine = _Engine(p, config)
    fbar = reduce_int_poly(prime_field(p), f.coefficients)
    primes = []
    for phibar, s in factor(fbar):
        phi = lift_monic(phibar)
        if s == 1:
            primes.append((1, phi.degree))
            engine.trace.append({"phi": phi.format(), "multiplicity": 1})
        else:
            primes.extend(engine.resolve(f, phi, Fraction(0), config.depth))
    st = SplittingType(tuple(primes), True, tuple(engine.trace))
    if st.degree() != f.degree:
        raise Unresolved(f"splitting {st} does not add up to {f.degree}", p=p)
    return st


def splitting_type(t: Trinomial, p: int, config: EngineConfig | None = None) -> SplittingType:
    if t.b == 0:
        raise DegenerateInput("b = 0: x divides f")
    if t.D == 0:
        raise DegenerateInput("discriminant is zero")
    f = trinomial_poly(t)
    if t.D % p:
        # unramified: the splitting is read off the factorisation mod p
        fac = factor(reduce_int_poly(prime_field(p), f.coefficients))
        trace = ({"unramified": [[u.format("x"), m] for u, m in fac]},)
        return SplittingType(tuple((1, u.degree) for u, _ in fac), True, trace)
    return split_poly(f, p, config)


def engstrom_criterion(s: SplittingType, p: int) -> bool:
    """More primes of some residual degree than monic irreducibles of that degree."""
    if not s.complete:
        raise IncompleteInput("splitting type is incomplete")
    counts: dict[int, int] = {}
    for _, f in s.factors:
        counts[f] = counts.get(f, 0) + 1
    return any(n > count_monic_irreducibles(p, h) for h, n in counts.items())


def _large_prime_guard() -> None:
    # at most 7 primes lie above p, and N_p(h) >= N_7(h) >= 7 for p >= 7
    for h in range(1, 8):
        assert count_monic_irreducibles(7, h) >= 7


def prime_verdict(t: Trinomial, p: int, config: EngineConfig | None = None) -> PrimeVerdict:
    s = splitting_type(t, p, config)
    return PrimeVerdict(p, s, engstrom_criterion(s, p), s.trace)


def engine_index_divisors(t: Trinomial, config: EngineConfig | None = None) -> set[int]:
    _large_prime_guard()
    out = set()
    for p in ENGINE_PRIMES:
        try:
            if prime_verdict(t, p, config).is_common_index_divisor:
                out.add(p)
        except Unresolved as exc:
            exc.p = p
            raise
    return out
