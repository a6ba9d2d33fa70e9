"""Polynomials with exact rational coefficients.

Coefficients are ``int`` whenever possible and :class:`~fractions.Fraction`
otherwise; every operation here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import InvalidPhi, NotPIntegral
from .exact import INFINITY, Trinomial, Valuation, vp_rational


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@dataclass(frozen=True)
class QPoly:
    """Dense polynomial, coefficients low-to-high, trailing zeros trimmed."""

    coefficients: tuple = ()

    def __post_init__(self):
        coeffs = [_clean(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def of(cls, *coeffs) -> "QPoly":
        return cls(tuple(coeffs))

    @classmethod
    def x(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def linear(cls, c: Rational) -> "QPoly":
        """``x - c``."""
        return cls((-c, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __getitem__(self, i):
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return QPoly(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return QPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = QPoly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod_monic(self, phi: "QPoly"):
        """Quotient and remainder by a monic divisor (no division needed)."""
        if not phi.is_monic():
            raise InvalidPhi("divisor must be monic")
        a = list(self.coefficients)
        d = phi.degree
        if len(a) - 1 < d:
            return QPoly(), self
        quo = [0] * (len(a) - d)
        pc = phi.coefficients
        for i in range(len(a) - 1, d - 1, -1):
            c = a[i]
            if c:
                quo[i - d] = c
                for j in range(d):
                    if pc[j]:
                        a[i - d + j] -= c * pc[j]
                a[i] = 0
        return QPoly(tuple(quo)), QPoly(tuple(a[:d]))

    def derivative(self) -> "QPoly":
        return QPoly(tuple(i * c for i, c in enumerate(self.coefficients) if i))

    def __call__(self, x0):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x0 + c
        return _clean(acc)

    def scale(self, c) -> "QPoly":
        return QPoly(tuple(u * c for u in self.coefficients))

    def format(self, var: str = "x") -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()


def _coerce(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    return QPoly((x,))


def trinomial_poly(t: Trinomial) -> QPoly:
    return QPoly(tuple(t.coefficients()))


@dataclass(frozen=True)
class PhiExpansion:
    """``f = sum(coeffs[i] * phi**i)`` with ``deg coeffs[i] < deg phi``."""

    phi: QPoly
    coeffs: tuple

    @property
    def top(self) -> int:
        return len(self.coeffs) - 1

    def reassemble(self) -> QPoly:
        out = QPoly()
        power = QPoly((1,))
        for c in self.coeffs:
            out = out + c * power
            power = power * self.phi
        return out

    def top_down(self) -> list[QPoly]:
        """Coefficients from ``phi^n`` down to ``phi^0``."""
        return list(reversed(self.coeffs))


def phi_expand(f: QPoly, phi: QPoly) -> PhiExpansion:
    """Expansion by repeated division with remainder."""
    if not phi.is_monic():
        raise InvalidPhi("phi must be monic")
    if phi.degree < 1:
        raise InvalidPhi("phi must have positive degree")
    coeffs = []
    rest = f
    if phi.degree == 1:
        # Taylor shift: a linear phi = x - c gives the coefficients of f(x + c).
        c = -phi.coefficients[0]
        shifted = translate(f, c)
        return PhiExpansion(phi, tuple(QPoly((u,)) for u in shifted.coefficients) or (QPoly(),))
    while not rest.is_zero():
        rest, r = rest.divmod_monic(phi)
        coeffs.append(r)
    return PhiExpansion(phi, tuple(coeffs) or (QPoly(),))


def gauss_valuation(g: QPoly, p: int) -> Valuation:
    if g.is_zero():
        return INFINITY
    return min(vp_rational(c, p) for c in g.coefficients if c != 0)


def check_p_integral(g: QPoly, p: int) -> None:
    for c in g.coefficients:
        if isinstance(c, Fraction) and c.denominator % p == 0:
            raise NotPIntegral(f"coefficient {c} is not {p}-integral")


def evaluate(f: QPoly, x0: Rational) -> Rational:
    return f(x0)


eval_poly = evaluate


def translate(f: QPoly, c: Rational) -> QPoly:
    """``f(x + c)`` by synthetic division (Horner's Taylor shift)."""
    a = list(f.coefficients)
    n = len(a)
    if c == 0 or n <= 1:
        return QPoly(tuple(a))
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] += c * a[j + 1]
    return QPoly(tuple(a))


def rescale(f: QPoly, c: Rational, scale: Rational) -> QPoly:
    """``f(c + scale * y)`` as a polynomial in ``y``."""
    g = translate(f, c)
    out, s = [], 1
    for u in g.coefficients:
        out.append(u * s)
        s *= scale
    return QPoly(tuple(out))


def _bareiss_det(mat: list[list[int]]) -> int:
    n = len(mat)
    m = [row[:] for row in mat]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant(f: list[int], g: list[int]) -> int:
    """Sylvester resultant of integer polynomials (low-to-high lists)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    fh, gh = list(reversed(f)), list(reversed(g))
    for i in range(n):
        rows.append([0] * i + fh + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gh + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def discriminant_via_resultant(t: Trinomial) -> int:
    """``(-1)^(n(n-1)/2) Res(f, f')`` for the monic degree-7 trinomial."""
    f = t.coefficients()
    df = [i * c for i, c in enumerate(f)][1:]
    n = 7
    return (-1) ** (n * (n - 1) // 2) * resultant(f, df)
