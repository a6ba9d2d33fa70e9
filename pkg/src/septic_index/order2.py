"""Second-order data: the valuation V, key polynomials, second-order polygons
and residual polynomials for a linear psi, and the refinement of linear
centres.

Throughout, ``f`` has already been translated so that the first-order
factor is ``phi = x``; the slope ``l/e`` and ``psi = Y + delta`` come from the
non-regular first-order edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateFactor, InvalidPhi, Unresolved, UnsupportedPsi
from .exact import INFINITY, Valuation, is_finite, mod_rational, vp, vp_rational
from .gf import GFPoly, factor, prime_field
from .polygon import Edge, PolygonPoint, analyze, lower_hull
from .zpoly import PhiExpansion, QPoly, phi_expand


@dataclass(frozen=True)
class OrderTwoData:
    p: int
    l: int
    e: int
    psi: GFPoly
    key: QPoly

    @property
    def delta(self) -> int:
        return self.psi.coefficients[0]

    @property
    def root(self) -> int:
        """The root ``-delta`` of psi, i.e. the residue of ``x^e / p^l``."""
        return (-self.delta) % self.p

    @property
    def v_key(self) -> int:
        return self.e * self.l

    def with_key(self, key: QPoly) -> "OrderTwoData":
        return OrderTwoData(self.p, self.l, self.e, self.psi, key)

    def to_dict(self) -> dict:
        return {
            "slope": f"{self.l}/{self.e}",
            "psi": self.psi.format(),
            "key": self.key.format(),
        }


def _monomial_values(data: OrderTwoData, g: QPoly):
    for k, b in enumerate(g.coefficients):
        if b != 0:
            yield data.e * vp_rational(b, data.p) + k * data.l, k


def v2nd(data: OrderTwoData, g: QPoly) -> Valuation:
    """``V(sum b_k x^k) = min(e v(b_k) + k l)``; always an integer."""
    vals = [v for v, _ in _monomial_values(data, g)]
    return min(vals) if vals else INFINITY


def key_polynomial(p: int, l: int, e: int, psi: GFPoly) -> QPoly:
    """``x^e + delta p^l`` for ``psi = Y + delta``, delta taken in ``1..p-1``."""
    if psi.degree != 1:
        raise UnsupportedPsi(f"second-order psi must be linear, got {psi.format()}")
    psi = psi.monic()
    delta = psi.coefficients[0]
    if delta == 0:
        raise InvalidPhi("psi = Y has no unit root")
    return QPoly((delta * p**l,) + (0,) * (e - 1) + (1,))


def make_data(p: int, l: int, e: int, psi: GFPoly) -> OrderTwoData:
    return OrderTwoData(p, l, e, psi.monic(), key_polynomial(p, l, e, psi))


def check_key(data: OrderTwoData) -> bool:
    """The four defining properties of a key polynomial for ``(l/e, psi)``."""
    key = data.key
    if not key.is_monic() or key.degree != data.e * data.psi.degree:
        return False
    if any(mod_rational(Fraction(c), data.p) for c in key.coefficients[:-1]):
        return False
    an = analyze(key, QPoly.x(), data.p)
    edges = an.polygon.positive_edges()
    if len(edges) != 1 or (edges[0].l, edges[0].e) != (data.l, data.e):
        return False
    return len(an.residuals) == 1 and an.residuals[0].residual == data.psi


@dataclass(frozen=True)
class OrderTwoPolygon:
    points: tuple
    edges: tuple
    expansion: PhiExpansion = field(compare=False, repr=False)

    @property
    def u(self) -> int:
        return self.expansion.top

    def coefficient(self, index: int) -> QPoly:
        return self.expansion.coeffs[self.u - index]

    def positive_edges(self, min_slope: Fraction = Fraction(0)) -> list[Edge]:
        return [e for e in self.edges if e.slope > min_slope]

    def to_dict(self) -> dict:
        return {
            "points": [[pt.index, str(pt.value)] for pt in self.points],
            "edges": [e.to_dict() for e in self.edges],
        }


def polygon2(f: QPoly, data: OrderTwoData) -> OrderTwoPolygon:
    """Points ``(j, V(a_{u-j}) + (u-j) V(Phi))``, leading term at ``j = 0``."""
    expansion = phi_expand(f, data.key)
    u = expansion.top
    points = []
    for j in range(u + 1):
        i = u - j
        va = v2nd(data, expansion.coeffs[i])
        points.append(PolygonPoint(j, va + i * data.v_key if is_finite(va) else INFINITY))
    points = tuple(points)
    return OrderTwoPolygon(points, tuple(lower_hull(list(points))), expansion)


def _dominant(data: OrderTwoData, g: QPoly):
    """``(k, unit part mod p, p-valuation)`` of the monomial realising V(g)."""
    best = min(_monomial_values(data, g))
    k = best[1]
    b = Fraction(g.coefficients[k])
    v = vp_rational(b, data.p)
    unit = b / Fraction(data.p) ** v
    return k, mod_rational(unit, data.p), v


def monomial_denominator(data: OrderTwoData, edge: Edge) -> tuple[int, int]:
    """``(alpha, beta)`` with ``V(p^alpha x^beta) = e_t V(Phi) + l_t``, ``beta < e``."""
    target = edge.e * data.v_key + edge.l
    for beta in range(data.e):
        rest = target - beta * data.l
        if rest % data.e == 0 and rest >= 0:
            return rest // data.e, beta
    raise ValueError("no monomial of the required value")


def residual2(f: QPoly, data: OrderTwoData, edge: Edge, poly: OrderTwoPolygon | None = None) -> GFPoly:
    """Second-order residual polynomial of the side ``edge`` over F_p.

    Its roots are the residues of ``Phi(theta)^{e_t} / p^alpha theta^beta``.
    Each lattice coefficient is the unit of the dominant monomial of the
    matching Phi-coefficient, relative to the first one, twisted by a power
    of the residue of ``x^e/p^l``.
    """
    if poly is None:
        poly = polygon2(f, data)
    p = data.p
    _, beta = monomial_denominator(data, edge)
    t = edge.degree
    coeffs = [0] * (t + 1)
    k0, u0, _ = _dominant(data, poly.coefficient(edge.start.index))
    inv0 = pow(u0, -1, p)
    for k in range(t + 1):
        j = edge.start.index + k * edge.e
        y = edge.start.value + k * edge.l
        if poly.points[j].value != y:
            continue
        ki, ui, _ = _dominant(data, poly.coefficient(j))
        shift = ki - k0 - k * beta
        assert shift % data.e == 0
        m = shift // data.e
        coeffs[t - k] = ui * inv0 * pow(data.root, m, p) % p
    return GFPoly(prime_field(p), tuple(coeffs))


def primes_from_order2(data: OrderTwoData, edges_with_residuals) -> list[tuple[int, int]]:
    """``(e e_t, deg psi deg W)`` for every irreducible factor W of each residual."""
    out = []
    for edge, res in edges_with_residuals:
        for w, mult in factor(res):
            if mult > 1:
                raise Unresolved(f"second-order residual {res.format()} is not separable", p=data.p)
            out.append((data.e * edge.e, data.psi.degree * w.degree))
    return out


@dataclass(frozen=True)
class OrderTwoStep:
    data: OrderTwoData
    polygon: OrderTwoPolygon
    min_slope: Fraction
    residuals: tuple

    def to_dict(self) -> dict:
        return {
            "data": self.data.to_dict(),
            "min_slope": str(self.min_slope),
            "polygon": self.polygon.to_dict(),
            "residuals": [
                {"edge": e.to_dict(), "residual": r.format(), "factors": [[w.format(), m] for w, m in factor(r)]}
                for e, r in self.residuals
            ],
        }


def order2_split(f: QPoly, data: OrderTwoData, span: int, replacements: int = 1, trace=None):
    """Primes of the psi-cluster of ``f`` (already centred at ``phi = x``).

    ``span`` is the multiplicity of psi in the first-order residual; the
    positive part of the second-order polygon must have exactly that width.
    A cluster whose residual is ``(Y - zeta)^s`` on a side of integral slope
    is handled by replacing Phi with ``Phi - zeta p^alpha x^beta``, at most
    ``replacements`` times per cluster.
    """
    if trace is None:
        trace = []
    return _order2(f, data, Fraction(0), span, replacements, trace)


def _order2(f, data, min_slope, span, replacements, trace):
    poly = polygon2(f, data)
    if not poly.expansion.coeffs[0].coefficients:
        raise DegenerateFactor(f"{data.key.format()} divides the polynomial exactly", factor=data.key)
    edges = poly.positive_edges(min_slope)
    width = sum(e.length for e in edges)
    if width != span:
        raise Unresolved(f"second-order principal width {width} differs from {span}", p=data.p)
    residuals = tuple((edge, residual2(f, data, edge, poly)) for edge in edges)
    trace.append({"order2": OrderTwoStep(data, poly, min_slope, residuals).to_dict()})
    out = []
    for edge, res in residuals:
        for w, mult in factor(res):
            if mult == 1:
                out.append((data.e * edge.e, data.psi.degree * w.degree))
                continue
            if replacements <= 0 or edge.e != 1 or w.degree != 1:
                raise Unresolved(
                    f"second-order residual {res.format()} is not separable", p=data.p
                )
            alpha, beta = monomial_denominator(data, edge)
            zeta = (-w.monic().coefficients[0]) % data.p
            key = data.key - QPoly((0,) * beta + (zeta * data.p**alpha,))
            trace.append({"key_replacement": key.format()})
            out.extend(
                _order2(f, data.with_key(key), edge.slope, mult, replacements - 1, trace)
            )
    return out


# ---------------------------------------------------------------------------
# refinement of a linear centre


@dataclass(frozen=True)
class Refinement:
    """A better centre ``c`` and the slope scope it is valid for.

    ``scoped`` refinements only account for one residual cluster (the new
    scope is that cluster's slope); otherwise the whole analysis at the
    previous scope is regular at the new centre.
    """

    center: Fraction
    min_slope: Fraction
    method: str
    scoped: bool


@dataclass(frozen=True)
class Escalate:
    reason: str


def _as_trinomial(f: QPoly):
    c = f.coefficients
    if len(c) == 8 and c[7] == 1 and not any(c[2:7]) and all(isinstance(x, int) for x in c):
        return c[1], c[0]
    return None


def closed_form_centers(f: QPoly, p: int) -> list[tuple[str, Fraction]]:
    """The explicit 2-adic centres ``mu = -7b/6a`` and ``rho = 2^u + 7b/6a``.

    Only offered for ``x^7 + ax + b`` with ``a = 1 mod 4``, ``b = 2 mod 4``.
    """
    ab = _as_trinomial(f)
    if p != 2 or ab is None:
        return []
    a, b = ab
    if a % 4 != 1 or b % 4 != 2:
        return []
    mu = Fraction(-7 * b, 6 * a)
    out = [("mu", mu)]
    d = -(7**7) * b**6 - 6**6 * a**7
    vd = vp(d, 2)
    if is_finite(vd) and vd % 2 == 0 and vd >= 8:
        u = (vd - 6) // 2
        out.append(("rho", 2**u + Fraction(7 * b, 6 * a)))
    return out


def refine_center(
    f: QPoly,
    p: int,
    c,
    budget: int = 64,
    *,
    min_slope: Fraction = Fraction(0),
    cluster=None,
    allow_recenter: bool = True,
):
    """Look for a better centre for the stuck linear factor ``x - c``.

    Candidates are tried in order: a Newton step, the explicit 2-adic
    centres, then unit offsets ``c + t p^l`` at the stuck slope ``l``.  A
    candidate is accepted when it lies in the stuck cluster (scoped result)
    or, if ``allow_recenter``, when it is congruent to ``c`` at the current
    scope and makes the whole analysis regular.
    """
    c = Fraction(c)
    phi = QPoly.linear(c)
    if cluster is None:
        an = analyze(f, phi, p, min_slope)
        if an.regular:
            return Refinement(c, min_slope, "regular", False)
        cluster = an.stuck[0]
    edge, psi = cluster.edge, cluster.psi
    if edge.e != 1 or psi.degree != 1:
        return Escalate(f"stuck edge slope {edge.l}/{edge.e} with psi {psi.format()}")
    l = edge.l
    r = (-psi.monic().coefficients[0]) % p
    target = c + r * Fraction(p) ** l

    def candidates():
        df = f.derivative()(c)
        if df != 0:
            step = c - Fraction(f(c)) / Fraction(df)
            if vp_rational(step.denominator, p) == 0:
                yield "newton", step
        for name, value in closed_form_centers(f, p):
            yield name, Fraction(value)
        for t in range(1, p):
            yield f"offset {t}*{p}^{l}", c + t * Fraction(p) ** l

    tried = 0
    for method, cand in candidates():
        if tried >= budget:
            break
        tried += 1
        if cand.denominator % p == 0:
            continue
        if f(cand) == 0:
            raise DegenerateFactor(f"x - {cand} divides the polynomial exactly", factor=QPoly.linear(cand))
        if vp_rational(cand - target, p) > l:
            return Refinement(cand, Fraction(l), method, True)
        if allow_recenter and cand != c and vp_rational(cand - c, p) > min_slope:
            if analyze(f, QPoly.linear(cand), p, min_slope).regular:
                return Refinement(cand, min_slope, method, False)
    raise Unresolved(f"no refinement of centre {c} within budget {budget}", p=p)
