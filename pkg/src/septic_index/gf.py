"""Polynomials over F_p and small extensions F_{p^m}.

A field element is encoded as an ``int`` in ``[0, q)``: its base-``p`` digits
are the coefficients (low to high) of its representative polynomial in ``x``
modulo the context's modulus.  So in F_4 = F_2[x]/<x^2+x+1> the element ``x``
is ``2`` and ``x + 1`` is ``3``.

Factorisation is square-free decomposition followed by Berlekamp's
algorithm, which is deterministic for every field size.  Trial division by
enumerated irreducibles is kept as :func:`factor_trial`, an independent
route used by the tests.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, DegenerateInput

ENUMERATION_LIMIT = 10**5


@dataclass(frozen=True)
class GFContext:
    """F_p[x]/<modulus>; ``modulus`` is monic, low-to-high, over F_p."""

    p: int
    modulus: tuple = (0, 1)

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(c % self.p for c in self.modulus))
        if self.modulus[-1] != 1:
            raise ValueError("modulus must be monic")

    @property
    def m(self) -> int:
        return len(self.modulus) - 1

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def tables(self) -> "_Tables":
        return _tables(self.p, self.modulus)

    # element helpers -----------------------------------------------------
    def elem(self, coeffs) -> int:
        """Encode an element given by its ``x``-coefficients (low to high)."""
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        digits = _poly_mod_prime([c % self.p for c in coeffs], list(self.modulus), self.p)
        return sum(c * self.p**i for i, c in enumerate(digits))

    def digits(self, e: int) -> list[int]:
        out = []
        for _ in range(self.m):
            e, r = divmod(e, self.p)
            out.append(r)
        return out

    def add(self, x, y):
        if self.m == 1:
            return (x + y) % self.p
        return self.tables.add[x][y]

    def sub(self, x, y):
        if self.m == 1:
            return (x - y) % self.p
        return self.tables.add[x][self.tables.neg[y]]

    def neg(self, x):
        if self.m == 1:
            return -x % self.p
        return self.tables.neg[x]

    def mul(self, x, y):
        if self.m == 1:
            return x * y % self.p
        return self.tables.mul[x][y]

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        if self.m == 1:
            return pow(x, -1, self.p)
        return self.tables.inv[x]

    def power(self, x, n):
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            n >>= 1
        return result

    def format_elem(self, e: int, var: str = "x") -> str:
        if self.m == 1:
            return str(e)
        return _format_dense(self.digits(e), var, str) or "0"


def prime_field(p: int) -> GFContext:
    return GFContext(p, (0, 1))


F4 = GFContext(2, (1, 1, 1))


class _Tables:
    def __init__(self, p, modulus):
        m = len(modulus) - 1
        q = p**m
        elems = [_digits(e, p, m) for e in range(q)]
        enc = {tuple(d): i for i, d in enumerate(elems)}
        self.add = [[enc[tuple((u + v) % p for u, v in zip(x, y))] for y in elems] for x in elems]
        self.neg = [enc[tuple(-u % p for u in x)] for x in elems]
        self.mul = []
        for x in elems:
            row = []
            for y in elems:
                prod = [0] * (2 * m - 1)
                for i, u in enumerate(x):
                    if u:
                        for j, v in enumerate(y):
                            prod[i + j] = (prod[i + j] + u * v) % p
                red = _poly_mod_prime(prod, list(modulus), p)
                red += [0] * (m - len(red))
                row.append(enc[tuple(red[:m])])
            self.mul.append(row)
        self.inv = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if self.mul[x][y] == 1:
                    self.inv[x] = y
                    break
            else:
                raise ValueError("modulus is not irreducible")


@functools.lru_cache(maxsize=None)
def _tables(p, modulus):
    return _Tables(p, modulus)


def _digits(e, p, m):
    out = []
    for _ in range(m):
        e, r = divmod(e, p)
        out.append(r)
    return out


def _poly_mod_prime(a, mod, p):
    """Remainder of ``a`` by monic ``mod`` over F_p, trimmed."""
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    a = [c % p for c in a[:dm]] if len(a) > dm else [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _format_dense(coeffs, var, fmt):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c in (0, "0"):
            continue
        s = fmt(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(s)
        elif s == "1":
            terms.append(mono)
        elif any(ch in s for ch in "+-"):
            terms.append(f"({s})*{mono}")
        else:
            terms.append(f"{s}*{mono}")
    return "+".join(terms)


# ---------------------------------------------------------------------------
# dense polynomial arithmetic on coefficient lists (low to high)


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(ctx, a, b):
    n = max(len(a), len(b))
    out = [ctx.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def psub(ctx, a, b):
    n = max(len(a), len(b))
    out = [ctx.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def pmul(ctx, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                if v:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(u, v))
    return _trim(out)


def pscale(ctx, a, c):
    return _trim([ctx.mul(u, c) for u in a])


def pdivmod(ctx, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv_lead = ctx.inv(b[-1])
    if len(a) - 1 < db:
        return [], _trim(a)
    quo = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = ctx.mul(c, inv_lead)
            quo[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = ctx.sub(a[i - db + j], ctx.mul(c, b[j]))
    return _trim(quo), _trim(a[:db])


def pmod(ctx, a, b):
    return pdivmod(ctx, a, b)[1]


def pmonic(ctx, a):
    if not a:
        return []
    return pscale(ctx, a, ctx.inv(a[-1]))


def pgcd(ctx, a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, pmod(ctx, a, b)
    return pmonic(ctx, a)


def pderiv(ctx, a):
    out = []
    for i in range(1, len(a)):
        c = a[i]
        for _ in range(i - 1):
            c = ctx.add(c, a[i])
        out.append(c if i % ctx.p else 0)
    return _trim(out)


def ppowmod(ctx, base, n, mod):
    result = [1]
    base = pmod(ctx, base, mod)
    while n:
        if n & 1:
            result = pmod(ctx, pmul(ctx, result, base), mod)
        base = pmod(ctx, pmul(ctx, base, base), mod)
        n >>= 1
    return result


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GFPoly:
    """Polynomial over ``context``; coefficients are encoded field elements."""

    context: GFContext
    coefficients: tuple = ()

    def __post_init__(self):
        coeffs = list(self.coefficients)
        _trim(coeffs)
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_elems(cls, ctx, coeffs):
        """Build from per-coefficient ``x``-digit lists or plain ints."""
        return cls(ctx, tuple(ctx.elem(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def lead(self) -> int:
        return self.coefficients[-1]

    def _wrap(self, coeffs):
        return GFPoly(self.context, tuple(coeffs))

    def __add__(self, other):
        return self._wrap(padd(self.context, self.coefficients, other.coefficients))

    def __sub__(self, other):
        return self._wrap(psub(self.context, self.coefficients, other.coefficients))

    def __mul__(self, other):
        return self._wrap(pmul(self.context, self.coefficients, other.coefficients))

    def __divmod__(self, other):
        q, r = pdivmod(self.context, self.coefficients, other.coefficients)
        return self._wrap(q), self._wrap(r)

    def __pow__(self, n):
        out = self._wrap([1])
        for _ in range(n):
            out = out * self
        return out

    def monic(self):
        return self._wrap(pmonic(self.context, self.coefficients))

    def derivative(self):
        return self._wrap(pderiv(self.context, self.coefficients))

    def gcd(self, other):
        return self._wrap(pgcd(self.context, self.coefficients, other.coefficients))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = self.context.add(self.context.mul(acc, x), c)
        return acc

    def roots(self) -> list[int]:
        return [x for x in range(self.context.q) if self(x) == 0]

    def format(self, var: str = "Y") -> str:
        ctx = self.context
        if not self.coefficients:
            return "0"
        return _format_dense(list(self.coefficients), var, lambda e: ctx.format_elem(e))

    def __str__(self):
        return self.format("Y")

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coefficients)))


def reduce_int_poly(ctx: GFContext, coeffs) -> GFPoly:
    """Image of an integer (or p-integral rational) polynomial in F_p[Y]."""
    from .exact import mod_rational

    return GFPoly(ctx, tuple(ctx.elem(mod_rational(c, ctx.p)) for c in coeffs))


# ---------------------------------------------------------------------------
# factorisation


def _pth_root_elem(ctx, c):
    # Frobenius is bijective on F_q; its inverse is x -> x^(q/p).
    return ctx.power(c, ctx.q // ctx.p)


def _squarefree_decomposition(ctx, f):
    """List of (squarefree poly, multiplicity) with product ``f`` (monic)."""
    out = []
    f = pmonic(ctx, f)
    i = 1
    df = pderiv(ctx, f)
    if df:
        c = pgcd(ctx, f, df)
        w = pdivmod(ctx, f, c)[0]
        while len(w) > 1:
            y = pgcd(ctx, w, c)
            fac = pdivmod(ctx, w, y)[0]
            if len(fac) > 1:
                out.append((fac, i))
            w = y
            c = pdivmod(ctx, c, y)[0]
            i += 1
        if len(c) > 1:
            root = _pth_root_poly(ctx, c)
            out.extend((g, m * ctx.p) for g, m in _squarefree_decomposition(ctx, root))
    else:
        root = _pth_root_poly(ctx, f)
        out.extend((g, m * ctx.p) for g, m in _squarefree_decomposition(ctx, root))
    return out


def _pth_root_poly(ctx, f):
    p = ctx.p
    return _trim([_pth_root_elem(ctx, f[i]) for i in range(0, len(f), p)])


def _nullspace(ctx, rows, n):
    """Basis of {v : v * M = 0} for the n x n matrix given by ``rows``."""
    # Solve M^T v = 0 by Gaussian elimination on the transpose.
    mat = [[rows[j][i] for j in range(n)] for i in range(n)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = ctx.inv(mat[r][col])
        mat[r] = [ctx.mul(v, inv) for v in mat[r]]
        for i in range(n):
            if i != r and mat[i][col]:
                c = mat[i][col]
                mat[i] = [ctx.sub(u, ctx.mul(c, v)) for u, v in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == n:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = ctx.neg(mat[i][fc])
        basis.append(v)
    return basis


def _berlekamp(ctx, f):
    """Irreducible factors of a monic squarefree ``f``."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    q = ctx.q
    xq = ppowmod(ctx, [0, 1], q, f)
    rows = []
    cur = [1]
    for _ in range(n):
        row = list(cur) + [0] * (n - len(cur))
        rows.append(row)
        cur = pmod(ctx, pmul(ctx, cur, xq), f)
    # Berlekamp matrix Q - I
    for i in range(n):
        rows[i][i] = ctx.sub(rows[i][i], 1)
    basis = _nullspace(ctx, rows, n)
    k = len(basis)
    factors = [f]
    if k == 1:
        return factors
    for v in basis:
        h = _trim(list(v))
        if len(h) <= 1:
            continue
        new = []
        for g in factors:
            if len(g) - 1 <= 1:
                new.append(g)
                continue
            rest = g
            for s in range(q):
                if len(rest) - 1 <= 0:
                    break
                d = pgcd(ctx, rest, psub(ctx, h, [s]))
                if 0 < len(d) - 1 < len(rest) - 1:
                    new.append(d)
                    rest = pdivmod(ctx, rest, d)[0]
            if len(rest) > 1:
                new.append(pmonic(ctx, rest))
        factors = new
        if len(factors) == k:
            break
    return factors


def _canonical(ctx, pairs):
    merged: dict = {}
    for g, m in pairs:
        key = tuple(g)
        merged[key] = merged.get(key, 0) + m
    out = [(GFPoly(ctx, k), m) for k, m in merged.items()]
    out.sort(key=lambda gm: gm[0].sort_key())
    return out


def factor(f: GFPoly) -> list[tuple[GFPoly, int]]:
    """Monic irreducible factors with multiplicities, canonically ordered.

    The leading coefficient of a non-monic input is discarded.
    """
    if f.is_zero():
        raise DegenerateInput("cannot factor the zero polynomial")
    if f.degree < 1:
        return []
    return _factor_cached(f.context, f.monic().coefficients)


@functools.lru_cache(maxsize=65536)
def _factor_cached(ctx, coeffs):
    pairs = []
    for g, m in _squarefree_decomposition(ctx, list(coeffs)):
        for h in _berlekamp(ctx, g):
            pairs.append((h, m))
    return _canonical(ctx, pairs)


def is_separable(f: GFPoly) -> bool:
    """True iff ``gcd(f, f')`` is constant."""
    if f.is_zero():
        raise DegenerateInput("zero polynomial")
    return f.gcd(f.derivative()).degree == 0


def enumerate_monic_irreducibles(p: int, h: int, ctx: GFContext | None = None) -> list[GFPoly]:
    """All monic irreducibles of degree ``h`` over F_p (or over ``ctx``)."""
    ctx = ctx or prime_field(p)
    q = ctx.q
    if q**h > ENUMERATION_LIMIT:
        raise BudgetExceeded(f"{q}^{h} polynomials exceed the enumeration limit")
    return list(_enumerate_cached(ctx, h))


@functools.lru_cache(maxsize=None)
def _enumerate_cached(ctx, h):
    q = ctx.q
    if h == 1:
        return tuple(GFPoly(ctx, (c, 1)) for c in range(q))

    def encode(coeffs):
        return sum(c * q**i for i, c in enumerate(coeffs[:h]))

    reducible = bytearray(q**h)
    for d in range(1, h // 2 + 1):
        for g in _enumerate_cached(ctx, d):
            for tail in itertools.product(range(q), repeat=h - d):
                prod = pmul(ctx, list(g.coefficients), list(tail) + [1])
                reducible[encode(prod)] = 1
    out = []
    for code in range(q**h):
        if not reducible[code]:
            out.append(GFPoly(ctx, tuple(_digits(code, q, h)) + (1,)))
    out.sort(key=GFPoly.sort_key)
    return tuple(out)


def factor_trial(f: GFPoly) -> list[tuple[GFPoly, int]]:
    """Factorisation by trial division with enumerated irreducibles."""
    if f.is_zero():
        raise DegenerateInput("cannot factor the zero polynomial")
    ctx = f.context
    rest = f.monic()
    out = []
    d = 1
    while 2 * d <= rest.degree:
        for g in enumerate_monic_irreducibles(ctx.p, d, ctx):
            m = 0
            while True:
                quo, rem = divmod(rest, g)
                if not rem.is_zero():
                    break
                rest, m = quo, m + 1
            if m:
                out.append((g, m))
        d += 1
    if rest.degree >= 1:
        out.append((rest, 1))
    return _canonical(ctx, [(list(g.coefficients), m) for g, m in out])


def _int_mulmod(u: list[int], v: list[int], f: list[int], q: int) -> list[int]:
    # f monic of degree n; u, v of length n
    n = len(f) - 1
    prod = [0] * (2 * n - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                prod[i + j] += ui * vj
    for k in range(2 * n - 2, n - 1, -1):
        c = prod[k] % q
        if c:
            for j in range(n):
                prod[k - n + j] -= c * f[j]
    return [c % q for c in prod[:n]]


def _int_powmod_x(e: int, f: list[int], q: int) -> list[int]:
    n = len(f) - 1
    result = [1] + [0] * (n - 1)
    base = [0, 1] + [0] * (n - 2) if n >= 2 else [(-f[0]) % q]
    while e:
        if e & 1:
            result = _int_mulmod(result, base, f, q)
        e >>= 1
        if e:
            base = _int_mulmod(base, base, f, q)
    return result


def _frobenius_powers(f: list[int], q: int, kmax: int) -> list[list[int]]:
    """``x^(q^k) mod f`` for ``k = 0..kmax`` via the matrix of ``g -> g^q``."""
    n = len(f) - 1
    xq = _int_powmod_x(q, f, q)
    cols = [[1] + [0] * (n - 1)]
    for _ in range(n - 1):
        cols.append(_int_mulmod(cols[-1], xq, f, q))
    out = [[0, 1] + [0] * (n - 2), xq]
    for _ in range(kmax - 1):
        g = out[-1]
        nxt = [0] * n
        for i, gi in enumerate(g):
            if gi:
                for j, c in enumerate(cols[i]):
                    nxt[j] += gi * c
        out.append([c % q for c in nxt])
    return out


def is_irreducible_prime_field(coeffs: list[int], q: int) -> bool:
    """Rabin test over F_q (q prime) for a monic integer polynomial."""
    ctx = prime_field(q)
    f = _trim([c % q for c in coeffs])
    n = len(f) - 1
    if n < 1:
        return False
    if f[-1] != 1:
        f = pmonic(ctx, f)
    if n == 1:
        return True
    x = [0, 1]
    frob = _frobenius_powers(f, q, n)
    prime_divs = [r for r in range(2, n + 1) if n % r == 0 and all(r % s for s in range(2, r))]
    for r in prime_divs:
        h = _trim(list(frob[n // r]))
        if len(pgcd(ctx, f, psub(ctx, h, x))) - 1 != 0:
            return False
    return not psub(ctx, _trim(list(frob[n])), x)
