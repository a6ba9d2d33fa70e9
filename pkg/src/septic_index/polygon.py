"""First-order phi-Newton polygons, residual polynomials and Ore splitting.

Points use the convention ``P_i = (i, v(a_{n-i}))``: the leading
phi-coefficient sits at abscissa 0, slopes increase to the right and the
edges of positive slope (the principal part) sit at the right-hand end.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import DegenerateFactor, DegenerateInput, Unresolved
from .exact import Valuation, is_finite, mod_rational
from .gf import GFContext, GFPoly, factor, prime_field, reduce_int_poly
from .zpoly import PhiExpansion, QPoly, check_p_integral, gauss_valuation, phi_expand


@dataclass(frozen=True)
class PolygonPoint:
    index: int
    value: Valuation


@dataclass(frozen=True)
class Edge:
    start: PolygonPoint
    end: PolygonPoint
    l: int
    e: int
    length: int

    @classmethod
    def between(cls, start: PolygonPoint, end: PolygonPoint) -> "Edge":
        length = end.index - start.index
        rise = end.value - start.value
        g = gcd(rise, length)
        return cls(start, end, rise // g, length // g, length)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.l, self.e)

    @property
    def degree(self) -> int:
        """Degree of the attached residual polynomial."""
        return self.length // self.e

    def line_value(self, index: int) -> Fraction:
        return self.start.value + self.slope * (index - self.start.index)

    def to_dict(self) -> dict:
        return {
            "start": [self.start.index, self.start.value],
            "end": [self.end.index, self.end.value],
            "slope": f"{self.l}/{self.e}",
            "length": self.length,
        }


def lower_hull(points: list[PolygonPoint]) -> list[Edge]:
    """Edges of the lower convex hull; collinear points are merged."""
    pts = sorted((pt for pt in points if is_finite(pt.value)), key=lambda pt: pt.index)
    hull: list[PolygonPoint] = []
    for pt in pts:
        while len(hull) >= 2:
            p0, p1 = hull[-2], hull[-1]
            cross = (p1.index - p0.index) * (pt.value - p0.value) - (p1.value - p0.value) * (
                pt.index - p0.index
            )
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return [Edge.between(hull[i], hull[i + 1]) for i in range(len(hull) - 1)]


@dataclass(frozen=True)
class NewtonPolygon:
    phi: QPoly
    p: int
    points: tuple
    edges: tuple
    expansion: PhiExpansion = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.expansion.top

    def coefficient(self, index: int) -> QPoly:
        """The phi-coefficient plotted at abscissa ``index``."""
        return self.expansion.coeffs[self.n - index]

    def principal_start(self) -> int:
        """Abscissa of the rightmost point of minimal value."""
        finite = [pt for pt in self.points if is_finite(pt.value)]
        low = min(pt.value for pt in finite)
        return max(pt.index for pt in finite if pt.value == low)

    def positive_edges(self, min_slope: Fraction = Fraction(0)) -> list[Edge]:
        """Principal edges whose slope exceeds ``min_slope``."""
        return [e for e in self.edges if e.slope > min_slope]

    def principal_span(self) -> int:
        return self.n - self.principal_start()

    def to_dict(self) -> dict:
        return {
            "phi": self.phi.format(),
            "points": [[pt.index, str(pt.value)] for pt in self.points],
            "edges": [e.to_dict() for e in self.edges],
        }


def build_polygon(f: QPoly, phi: QPoly, p: int) -> NewtonPolygon:
    if f.is_zero():
        raise DegenerateInput("zero polynomial has no Newton polygon")
    check_p_integral(f, p)
    expansion = phi_expand(f, phi)
    n = expansion.top
    points = tuple(
        PolygonPoint(i, gauss_valuation(expansion.coeffs[n - i], p)) for i in range(n + 1)
    )
    return NewtonPolygon(phi, p, points, tuple(lower_hull(list(points))), expansion)


def residue_context(phi: QPoly, p: int) -> GFContext:
    """The field F_p[x]/<phi mod p>; the prime field when phi is linear."""
    if phi.degree == 1:
        return prime_field(p)
    return GFContext(p, tuple(mod_rational(c, p) for c in phi.coefficients))


def residue_of(ctx: GFContext, a: QPoly, p: int, shift: int, phi: QPoly) -> int:
    """Reduction of ``a / p**shift`` in F_p[x]/<phi>, as an encoded element."""
    scale = Fraction(1, p**shift) if shift >= 0 else p ** (-shift)
    coeffs = [mod_rational(Fraction(c) * scale, p) for c in a.coefficients]
    if phi.degree == 1:
        # evaluate at the root of phi mod p
        root = mod_rational(-Fraction(phi.coefficients[0]), p)
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * root + c) % p
        return acc
    return ctx.elem(coeffs or [0])


@dataclass(frozen=True)
class ResidualAssignment:
    edge: Edge
    residual: GFPoly

    def to_dict(self) -> dict:
        return {
            "edge": self.edge.to_dict(),
            "residual": self.residual.format(),
            "factors": [[u.format(), m] for u, m in factor(self.residual)],
        }


def residual_polynomial(f: QPoly, np: NewtonPolygon, edge: Edge) -> ResidualAssignment:
    """Residual polynomial of ``f`` attached to ``edge``.

    Position ``k`` on the edge (abscissa ``start + k e``) gives the
    coefficient of ``Y^(t-k)``; points strictly above the line give zero.
    The result is normalised to be monic.
    """
    ctx = residue_context(np.phi, np.p)
    t = edge.degree
    coeffs = [0] * (t + 1)
    for k in range(t + 1):
        j = edge.start.index + k * edge.e
        y = edge.start.value + k * edge.l
        if np.points[j].value == y:
            coeffs[t - k] = residue_of(ctx, np.coefficient(j), np.p, y, np.phi)
    res = GFPoly(ctx, tuple(coeffs))
    return ResidualAssignment(edge, res.monic())


@dataclass(frozen=True)
class SplittingType:
    factors: tuple
    complete: bool = True
    trace: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "factors", tuple(sorted((tuple(x) for x in self.factors), key=lambda ef: (ef[1], ef[0])))
        )

    def degree(self) -> int:
        return sum(e * f for e, f in self.factors)

    def format(self) -> str:
        return "{" + ",".join(f"({e},{f})" for e, f in self.factors) + "}"

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class StuckState:
    """A residual polynomial with a repeated irreducible factor ``psi``."""

    phi: QPoly
    edge: Edge
    psi: GFPoly
    multiplicity: int
    polygon: NewtonPolygon = field(compare=False, repr=False, default=None)


@dataclass(frozen=True)
class FirstOrderAnalysis:
    """Primes read off one polygon, plus the clusters that are not regular."""

    polygon: NewtonPolygon
    primes: tuple
    stuck: tuple
    residuals: tuple

    @property
    def regular(self) -> bool:
        return not self.stuck


def analyze(f: QPoly, phi: QPoly, p: int, min_slope: Fraction = Fraction(0)) -> FirstOrderAnalysis:
    """Ore's theorem applied to the principal edges steeper than ``min_slope``."""
    np = build_polygon(f, phi, p)
    if not np.expansion.coeffs[0].coefficients:
        raise DegenerateFactor(f"{phi.format()} divides the polynomial exactly", factor=phi)
    primes, stuck, residuals = [], [], []
    for edge in np.positive_edges(min_slope):
        ra = residual_polynomial(f, np, edge)
        residuals.append(ra)
        for u, mult in factor(ra.residual):
            if mult == 1:
                primes.append((edge.e, phi.degree * u.degree))
            else:
                stuck.append(StuckState(phi, edge, u, mult, np))
    return FirstOrderAnalysis(np, tuple(primes), tuple(stuck), tuple(residuals))


def lift_monic(u: GFPoly) -> QPoly:
    """Monic integer lift with coefficients in ``0..p-1`` (prime field only)."""
    if u.context.m != 1:
        raise ValueError("lifts are only defined for polynomials over F_p")
    return QPoly(tuple(u.monic().coefficients))


def ore_split(f: QPoly, p: int):
    """Splitting from first-order data alone, or the first StuckState met."""
    fbar = reduce_int_poly(prime_field(p), f.coefficients)
    if fbar.is_zero():
        raise DegenerateInput("f vanishes modulo p")
    primes, trace = [], []
    for phibar, s in factor(fbar):
        phi = lift_monic(phibar)
        if s == 1:
            primes.append((1, phi.degree))
            trace.append({"phi": phi.format(), "multiplicity": 1})
            continue
        if phi.degree > 2:
            raise Unresolved(f"repeated factor {phi.format()} of degree > 2", p=p)
        an = analyze(f, phi, p)
        trace.append(
            {
                "phi": phi.format(),
                "multiplicity": s,
                "polygon": an.polygon.to_dict(),
                "residuals": [ra.to_dict() for ra in an.residuals],
            }
        )
        if an.stuck:
            return an.stuck[0]
        primes.extend(an.primes)
    return SplittingType(tuple(primes), True, tuple(trace))
