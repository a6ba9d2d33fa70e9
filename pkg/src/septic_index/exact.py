"""Exact integer/rational arithmetic, p-adic valuations and counting helpers.

Integers are plain Python ``int`` and rationals are :class:`fractions.Fraction`
(``PRational``); both are exact.  Valuations are ``int`` or the singleton
:data:`INFINITY`, which is what the zero element gets.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import DegenerateInput, ZeroInput

PRational = Fraction


@functools.total_ordering
class _Infinity:
    """Valuation of zero.  Larger than every integer; absorbs addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    __str__ = __repr__

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("septic_index.INFINITY")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, other):
        if other == 0:
            raise ValueError("0 * INFINITY is undefined")
        if other < 0:
            raise ValueError("negative multiple of INFINITY")
        return self

    __rmul__ = __mul__

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()
Valuation = Union[int, _Infinity]


def is_finite(v: Valuation) -> bool:
    return v is not INFINITY


def vp(n: int, p: int) -> Valuation:
    """Exponent of the largest power of ``p`` dividing the integer ``n``."""
    if n == 0:
        return INFINITY
    n = abs(n)
    k = 0
    # Peel large blocks first so huge valuations stay cheap.
    block, bk = p, 1
    while n % block == 0:
        n //= block
        k += bk
        block, bk = block * block, bk * 2
    while n % p == 0:
        n //= p
        k += 1
    return k


def vp_rational(q: Rational, p: int) -> Valuation:
    if q == 0:
        return INFINITY
    return vp(q.numerator, p) - vp(q.denominator, p)


def unit_part(l: int, p: int) -> int:
    """``l / p**vp(l)``, sign preserved."""
    if l == 0:
        raise ZeroInput("unit part of 0 is undefined")
    return l // p ** vp(l, p)


def mod_rational(q: Rational, m: int) -> int:
    """Image of a rational with denominator prime to ``m`` in ``Z/mZ``."""
    den = q.denominator
    if den == 1:
        return q.numerator % m
    return (q.numerator * pow(den, -1, m)) % m


def discriminant_ab(a: int, b: int) -> int:
    return -(7**7) * b**6 - 6**6 * a**7


@dataclass(frozen=True)
class Trinomial:
    """``x^7 + a x + b``; ``chain`` records normalisation steps ``(p, k)``."""

    a: int
    b: int
    chain: tuple = field(default=(), compare=False)

    @property
    def D(self) -> int:
        return discriminant_ab(self.a, self.b)

    def coefficients(self) -> list[int]:
        """Low-to-high integer coefficient list."""
        return [self.b, self.a, 0, 0, 0, 0, 0, 1]

    def __str__(self):
        parts = ["x^7"]
        if self.a:
            parts.append(("+ " if self.a > 0 else "- ") + f"{abs(self.a)}*x")
        if self.b:
            parts.append(("+ " if self.b > 0 else "- ") + f"{abs(self.b)}")
        return " ".join(parts)


def discriminant(t: Trinomial) -> int:
    return discriminant_ab(t.a, t.b)


def mobius(n: int) -> int:
    result, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    return -result if n > 1 else result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@functools.lru_cache(maxsize=None)
def count_monic_irreducibles(p: int, h: int) -> int:
    """Number of monic irreducible polynomials of degree ``h`` over F_p."""
    if h < 1:
        raise ValueError("degree must be positive")
    total = sum(mobius(d) * p ** (h // d) for d in divisors(h))
    return total // h


def iroot(n: int, k: int) -> int:
    """Floor of the real ``k``-th root of ``n >= 0``."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def normalize(t: Trinomial) -> Trinomial:
    """Divide out ``theta -> theta/p`` while ``p^6 | a`` and ``p^7 | b``.

    A prime that can be removed satisfies ``p^7 <= |b|``, so trial division
    up to the integer 7th root of ``|b|`` finds every candidate; no
    factorisation bound is needed.
    """
    if t.b == 0:
        raise DegenerateInput("b = 0: x divides f")
    a, b = t.a, t.b
    chain = list(t.chain)
    d = 2
    while d <= iroot(abs(b), 7):
        k = 0
        while b % d**7 == 0 and a % d**6 == 0:
            a //= d**6
            b //= d**7
            k += 1
        if k:
            chain.append((d, k))
        d += 1 if d == 2 else 2
    return Trinomial(a, b, tuple(chain))


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, iroot(n, 2) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def trial_factor(n: int, bound: int = 10**6) -> tuple[dict[int, int], int]:
    """Prime factors of ``|n|`` below ``bound`` and the unfactored cofactor."""
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n and d <= bound:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1 and (n <= bound or d * d > n):
        out[n] = out.get(n, 0) + 1
        n = 1
    return out, n


def as_rational(x) -> Rational:
    if isinstance(x, (int, Fraction)):
        return x
    return Fraction(x)
