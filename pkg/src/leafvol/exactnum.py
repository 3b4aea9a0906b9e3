"""Exact rationals and arithmetic in cyclotomic fields Q(zeta_N).

Rationals are plain :class:`fractions.Fraction`. A cyclotomic element stores
its coordinates on the power basis 1, zeta, ..., zeta^(phi(N)-1), always
reduced modulo the N-th cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC
from typing import Iterable, Optional, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "CyclotomicElement",
    "as_rational",
    "cyc_inverse",
    "cyclotomic_polynomial",
    "divisors",
    "format_rational",
    "parse_rational",
    "root_of_unity",
    "totient",
]


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction."""
    if isinstance(text, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a 'p/q' string, got {text!r}")
    return Fraction(text.strip())


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


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


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    if n < 1:
        raise ValueError("totient needs n >= 1")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _int_poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; exact division of integer polynomials (low -> high)
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dd]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[:dd]):
        raise ArithmeticError("inexact cyclotomic division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _int_poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


# -- dense Q[x] helpers on lists of Fractions (low -> high) ---------------------

def _strip(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _reduce_mod_phi(coeffs: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    k = len(phi) - 1
    a = [Fraction(c) for c in coeffs]
    for i in range(len(a) - 1, k - 1, -1):
        c = a[i]
        if c:
            base = i - k
            for j, pj in enumerate(phi):
                if pj:
                    a[base + j] -= c * pj
    a = a[:k]
    a.extend([Fraction(0)] * (k - len(a)))
    return tuple(a)


def _qx_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _qx_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _strip(out)


def _qx_divmod(a, b):
    a = _strip(list(a))
    b = _strip(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _strip(q), _strip(a[: len(b) - 1])


def _qx_inverse_mod(a, m):
    """Inverse of a modulo m in Q[x] via the extended Euclidean algorithm."""
    r0, r1 = _strip(list(m)), _strip(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _qx_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qx_sub(s0, _qx_mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    return [c / r0[0] for c in s0]


class CyclotomicElement:
    """An element of Q(zeta_N) on the power basis modulo Phi_N.

    Values are immutable. Mixed-conductor arithmetic embeds both operands
    into Q(zeta_lcm). Ints and Fractions coerce in as conductor-1 constants.

    Hashing goes through the rational value when there is one, so rational
    elements hash like the equal Fraction. Non-rational elements only hash
    consistently within a single conductor.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Iterable = ()):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", _reduce_mod_phi(list(coeffs), conductor))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicElement is immutable")

    @classmethod
    def _raw(cls, conductor: int, coeffs: tuple) -> "CyclotomicElement":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "conductor", conductor)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def constant(cls, value, conductor: int = 1) -> "CyclotomicElement":
        return cls(conductor, [Fraction(value)])

    @classmethod
    def from_strings(cls, conductor: int, items: Sequence[str]) -> "CyclotomicElement":
        items = list(items)
        if len(items) != totient(conductor):
            raise ValueError(
                f"expected {totient(conductor)} coefficients for conductor {conductor}, got {len(items)}"
            )
        return cls(conductor, [parse_rational(s) for s in items])

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    # -- conversions ------------------------------------------------------

    def embed(self, conductor: int) -> "CyclotomicElement":
        """The same number viewed inside Q(zeta_M), M a multiple of the conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"cannot embed Q(zeta_{self.conductor}) into Q(zeta_{conductor})")
        step = conductor // self.conductor
        spread = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            spread[i * step] = c
        return CyclotomicElement(conductor, spread)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def rational_value(self) -> Optional[Fraction]:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, CyclotomicElement):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CyclotomicElement._raw(1, (Fraction(other),))
        if isinstance(other, _RationalABC):
            return CyclotomicElement._raw(1, (Fraction(other),))
        return None

    def _unify(self, other):
        if self.conductor == other.conductor:
            return self, other
        if other.conductor == 1:
            return self, other.embed(self.conductor)
        if self.conductor == 1:
            return self.embed(other.conductor), other
        n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.embed(n), other.embed(n)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.conductor == 1 and self.conductor != 1:
            c = list(self.coeffs)
            c[0] += o.coeffs[0]
            return CyclotomicElement._raw(self.conductor, tuple(c))
        a, b = self._unify(o)
        return CyclotomicElement._raw(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement._raw(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.conductor == 1:
            s = o.coeffs[0]
            return CyclotomicElement._raw(self.conductor, tuple(c * s for c in self.coeffs))
        if self.conductor == 1:
            s = self.coeffs[0]
            return CyclotomicElement._raw(o.conductor, tuple(c * s for c in o.coeffs))
        a, b = self._unify(o)
        return CyclotomicElement(a.conductor, _qx_mul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.conductor == 1 or not any(self.coeffs[1:]):
            return CyclotomicElement._raw(
                self.conductor, (1 / self.coeffs[0],) + self.coeffs[1:]
            )
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        inv = _qx_inverse_mod(list(self.coeffs), phi)
        return CyclotomicElement(self.conductor, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.conductor == 1:
            if not o.coeffs[0]:
                raise ZeroDivisionError("division by zero")
            s = o.coeffs[0]
            return CyclotomicElement._raw(self.conductor, tuple(c / s for c in self.coeffs))
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = CyclotomicElement._raw(self.conductor, _reduce_mod_phi([1], self.conductor))
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._unify(o)
        return a.coeffs == b.coeffs

    def __hash__(self):
        r = self.rational_value()
        if r is not None:
            return hash(r)
        return hash((self.conductor, self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"({c})*z{self.conductor}^{i}")
        return " + ".join(terms) if terms else "0"


def root_of_unity(n: int, a: int = 1) -> CyclotomicElement:
    """zeta_n ** a reduced modulo Phi_n."""
    if n < 1:
        raise ValueError("root_of_unity needs n >= 1")
    a %= n
    coeffs = [Fraction(0)] * (a + 1)
    coeffs[a] = Fraction(1)
    return CyclotomicElement(n, coeffs)


def cyc_inverse(x) -> CyclotomicElement:
    x = CyclotomicElement._coerce(x)
    return x.inverse()


def as_rational(x) -> Optional[Fraction]:
    """The rational value of ``x``, or ``None`` when ``x`` is not in Q."""
    if isinstance(x, CyclotomicElement):
        return x.rational_value()
    return Fraction(x)
