"""Univariate polynomials and rational functions over Q or Q(zeta_N).

Everything here is exact. The asymptotic machinery (partial fractions over
roots of unity, Laurent data at z = 1, leading growth of Taylor
coefficients) only ever needs poles that are roots of unity, so poles are
found by trial division with cyclotomic polynomials instead of root finding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Iterable, Optional, Sequence, Union

from .errors import InternalIrrationality, NonCyclotomicPole, ParseError, PoleAtOrigin
from .exactnum import (
    CyclotomicElement,
    as_rational,
    cyclotomic_polynomial,
    divisors,
    format_rational,
    parse_rational,
    root_of_unity,
    totient,
)

Scalar = Union[Fraction, CyclotomicElement]


def _scalar(c) -> Scalar:
    if isinstance(c, CyclotomicElement):
        return c
    if isinstance(c, bool):
        raise TypeError("booleans are not field elements")
    return Fraction(c)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class Polynomial:
    """Dense polynomial, ``coeffs[i]`` is the coefficient of z**i.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_scalar(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def one_minus_z_power(cls, d: int) -> "Polynomial":
        return cls([1] + [0] * (d - 1) + [-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Scalar:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def lead(self) -> Scalar:
        return self.coeffs[-1]

    def is_rational(self) -> bool:
        return all(as_rational(c) is not None for c in self.coeffs)

    def to_rational(self) -> "Polynomial":
        out = []
        for c in self.coeffs:
            r = as_rational(c)
            if r is None:
                raise InternalIrrationality(f"coefficient {c!r} is not rational")
            out.append(r)
        return Polynomial(out)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction, CyclotomicElement)) and not isinstance(other, bool):
            return Polynomial([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y != 0:
                    out[i + j] = out[i + j] + x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = Polynomial([1]), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = o.degree
        if len(rem) <= db:
            return Polynomial(), self
        quo = [Fraction(0)] * (len(rem) - db)
        inv_lead = 1 / o.lead()
        for i in range(len(quo) - 1, -1, -1):
            c = rem[i + db] * inv_lead
            quo[i] = c
            if c != 0:
                for j, bj in enumerate(o.coeffs):
                    if bj != 0:
                        rem[i + j] = rem[i + j] - c * bj
        return Polynomial(quo), Polynomial(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def scale(self, c) -> "Polynomial":
        return Polynomial([x * c for x in self.coeffs])

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(self.coeffs) != len(o.coeffs):
            return False
        return all(x == y for x, y in zip(self.coeffs, o.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead())

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise ValueError("zero polynomial has no valuation")

    def divide_by_linear(self, root) -> tuple["Polynomial", Scalar]:
        """Synthetic division by (z - root): returns (quotient, remainder)."""
        if self.is_zero():
            return Polynomial(), Fraction(0)
        out = [Fraction(0)] * len(self.coeffs)
        acc = Fraction(0)
        for i in range(len(self.coeffs) - 1, -1, -1):
            acc = acc * root + self.coeffs[i]
            out[i] = acc
        return Polynomial(out[1:]), out[0]

    def root_multiplicity(self, root) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial")
        mult, p = 0, self
        while True:
            q, r = p.divide_by_linear(root)
            if r != 0:
                return mult
            mult, p = mult + 1, q

    def taylor_at(self, root, terms: Optional[int] = None) -> list[Scalar]:
        """Coefficients a_i with p(z) = sum a_i (z - root)^i, first ``terms`` of them."""
        n = len(self.coeffs) if terms is None else terms
        out, p = [], self
        for _ in range(n):
            if p.is_zero():
                out.append(Fraction(0))
                continue
            p, r = p.divide_by_linear(root)
            out.append(r)
        return out

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        return f"Polynomial({list(self.coeffs)!r})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (the zero polynomial only when both inputs vanish)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def series_divide(num: Sequence, den: Sequence, terms: int) -> list:
    """First ``terms`` Taylor coefficients of num/den at 0 (den[0] != 0)."""
    d0 = den[0]
    if d0 == 0:
        raise PoleAtOrigin("denominator vanishes at the origin")
    inv = 1 / d0
    dlen = len(den)
    nlen = len(num)
    out = []
    for k in range(terms):
        acc = num[k] if k < nlen else Fraction(0)
        for i in range(1, min(k, dlen - 1) + 1):
            di = den[i]
            if di != 0:
                acc = acc - di * out[k - i]
        out.append(acc * inv)
    return out


# -- rational functions --------------------------------------------------------

Factors = tuple[tuple[int, int], ...]


def _factors_key(factors) -> Factors:
    merged: dict[int, int] = {}
    for d, mult in factors:
        d, mult = int(d), int(mult)
        if d < 1 or mult < 0:
            raise ValueError(f"bad denominator factor ({d}, {mult})")
        if mult:
            merged[d] = merged.get(d, 0) + mult
    return tuple(sorted(merged.items()))


def expand_factors(factors) -> Polynomial:
    out = Polynomial([1])
    for d, mult in factors:
        out = out * Polynomial.one_minus_z_power(d) ** mult
    return out


class RationalFunction:
    """numerator / denominator with an optional factored denominator.

    ``factored_denominator`` is a tuple of ``(d, mult)`` pairs meaning
    prod (1 - z^d)^mult; when present it expands to ``denominator``.
    """

    __slots__ = ("numerator", "denominator", "factored_denominator")

    def __init__(self, numerator, denominator=None, factored_denominator=None):
        num = numerator if isinstance(numerator, Polynomial) else Polynomial(numerator)
        if factored_denominator is not None:
            factored_denominator = _factors_key(factored_denominator)
            expanded = expand_factors(factored_denominator)
            if denominator is None:
                den = expanded
            else:
                den = denominator if isinstance(denominator, Polynomial) else Polynomial(denominator)
                if den != expanded:
                    raise ValueError("denominator does not match its factored form")
        else:
            if denominator is None:
                den = Polynomial([1])
            else:
                den = denominator if isinstance(denominator, Polynomial) else Polynomial(denominator)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)
        object.__setattr__(self, "factored_denominator", factored_denominator)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_factored(cls, numerator, factors) -> "RationalFunction":
        return cls(numerator, factored_denominator=factors)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_rational(self) -> bool:
        return self.numerator.is_rational() and self.denominator.is_rational()

    def normalized(self) -> "RationalFunction":
        """Reduced form: gcd 1, denominator with constant term 1 (monic if it vanishes at 0).

        The factored denominator survives only when nothing cancels.
        """
        num, den = self.numerator, self.denominator
        if num.is_zero():
            return RationalFunction(Polynomial(), Polynomial([1]))
        g = poly_gcd(num, den)
        factored = self.factored_denominator
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
            factored = None
        c0 = den[0]
        norm = c0 if c0 != 0 else den.lead()
        if norm != 1:
            num, den = num.scale(1 / norm), den.scale(1 / norm)
            factored = None if c0 == 0 else factored
        return RationalFunction(num, den, factored)

    # -- arithmetic (results are normalized) ---------------------------------

    @staticmethod
    def _coerce(other) -> Optional["RationalFunction"]:
        if isinstance(other, RationalFunction):
            return other
        p = Polynomial._coerce(other)
        return None if p is None else RationalFunction(p)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.denominator == o.denominator:
            return RationalFunction(self.numerator + o.numerator, self.denominator).normalized()
        return RationalFunction(
            self.numerator * o.denominator + o.numerator * self.denominator,
            self.denominator * o.denominator,
        ).normalized()

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator, self.factored_denominator)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(
            self.numerator * o.numerator, self.denominator * o.denominator
        ).normalized()

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * RationalFunction(o.denominator, o.numerator)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.numerator * o.denominator == o.numerator * self.denominator

    def __hash__(self):
        n = self.normalized()
        return hash((n.numerator, n.denominator))

    def __repr__(self):
        if self.factored_denominator is not None:
            return f"RationalFunction({self.numerator!r}, factors={self.factored_denominator!r})"
        return f"RationalFunction({self.numerator!r}, {self.denominator!r})"

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        if not self.is_rational():
            raise ValueError("only rational-coefficient functions serialize")
        num = [format_rational(c) for c in self.numerator.to_rational().coeffs]
        if self.factored_denominator is not None:
            return {
                "numerator": num,
                "denominator_factors": [[d, m] for d, m in self.factored_denominator],
            }
        return {
            "numerator": num,
            "denominator": [format_rational(c) for c in self.denominator.to_rational().coeffs],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "RationalFunction":
        try:
            num = Polynomial([parse_rational(s) for s in doc["numerator"]])
            if "denominator_factors" in doc:
                factors = [(int(d), int(m)) for d, m in doc["denominator_factors"]]
                return cls(num, factored_denominator=factors)
            if "denominator" in doc:
                return cls(num, Polynomial([parse_rational(s) for s in doc["denominator"]]))
            return cls(num)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational function document: {exc}") from exc


def as_rational_function(f) -> RationalFunction:
    if isinstance(f, RationalFunction):
        return f
    inner = getattr(f, "function", None)
    if isinstance(inner, RationalFunction):
        return inner
    p = Polynomial._coerce(f)
    if p is None:
        raise TypeError(f"cannot treat {type(f).__name__} as a rational function")
    return RationalFunction(p)


# -- operations -------------------------------------------------------------------


def series_coefficients(f, K: int) -> list[Scalar]:
    """Taylor coefficients c_0..c_K of f at 0, via the denominator's recurrence."""
    f = as_rational_function(f)
    if f.denominator[0] == 0:
        f = f.normalized()
        if f.denominator[0] == 0:
            raise PoleAtOrigin("rational function has a pole at z = 0")
    return series_divide(f.numerator.coeffs, f.denominator.coeffs, K + 1)


def pole_order(f, omega) -> int:
    """Order of the pole of f at ``omega`` (0 when f is regular there)."""
    f = as_rational_function(f)
    if f.is_zero():
        return 0
    return max(f.denominator.root_multiplicity(omega) - f.numerator.root_multiplicity(omega), 0)


def laurent_at_one(f, depth: int = 0) -> tuple[int, list[Fraction]]:
    """Pole order p at z = 1 and the coefficients of (1-z)^-p, ..., (1-z)^(-p+depth).

    Computed by substituting z = 1 - u and dividing power series in u.
    """
    f = as_rational_function(f)
    if f.is_zero():
        return 0, [Fraction(0)] * (depth + 1)
    # p(1 - u) = sum a_i (z-1)^i = sum (-1)^i a_i u^i
    def in_u(poly: Polynomial) -> list:
        return [c if i % 2 == 0 else -c for i, c in enumerate(poly.taylor_at(1))]

    num_u, den_u = in_u(f.numerator), in_u(f.denominator)
    vn = next(i for i, c in enumerate(num_u) if c != 0)
    vd = next(i for i, c in enumerate(den_u) if c != 0)
    order = max(vd - vn, 0)
    shift = vn - vd + order  # power of u multiplying the reduced quotient
    series = series_divide(num_u[vn:], den_u[vd:], depth + 1)
    coeffs = ([Fraction(0)] * shift + series)[: depth + 1]
    return order, coeffs


# -- cyclotomic factorization and partial fractions ----------------------------------


def cyclotomic_factorization(den: Polynomial, orders: Optional[Iterable[int]] = None) -> tuple[dict[int, int], Polynomial]:
    """Split a rational polynomial as c * prod Phi_d^e_d * rest.

    Returns ``({d: e_d}, rest)`` where ``rest`` has no cyclotomic factor among
    the orders tried. Without explicit ``orders``, every d with
    phi(d) <= deg(den) is tried.
    """
    den = den.to_rational()
    if orders is None:
        bound = max(den.degree, 0)
        # phi(d) >= sqrt(d / 2), so phi(d) <= deg forces d <= 2 deg^2
        orders = [d for d in range(1, 2 * bound * bound + 2) if totient(d) <= bound]
    found: dict[int, int] = {}
    rest = den
    for d in sorted(set(orders)):
        phi = Polynomial(cyclotomic_polynomial(d))
        while rest.degree >= phi.degree:
            q, r = divmod(rest, phi)
            if not r.is_zero():
                break
            found[d] = found.get(d, 0) + 1
            rest = q
    return found, rest


def _candidate_orders(f: RationalFunction) -> Optional[list[int]]:
    if f.factored_denominator is None:
        return None
    out: set[int] = set()
    for d, _ in f.factored_denominator:
        out.update(divisors(d))
    return sorted(out)


@dataclass(frozen=True)
class PartialFractionTerm:
    """coefficient * (pole - z)^(-order); ``root_order`` is the multiplicative order of ``pole``."""

    pole: CyclotomicElement
    order: int
    coefficient: Scalar
    root_order: int


@dataclass(frozen=True)
class PartialFractionForm:
    polynomial_part: Polynomial
    terms: tuple[PartialFractionTerm, ...]

    def term(self, pole, order: int) -> Optional[PartialFractionTerm]:
        for t in self.terms:
            if t.order == order and t.pole == pole:
                return t
        return None

    def max_order(self) -> int:
        return max((t.order for t in self.terms), default=0)

    def coefficient(self, k: int) -> Scalar:
        """Taylor coefficient of z^k of the reconstructed function."""
        acc = self.polynomial_part[k]
        for t in self.terms:
            # (w - z)^-j = w^-j sum_k C(k+j-1, k) w^-k z^k
            acc = acc + t.coefficient * comb(k + t.order - 1, k) * t.pole ** (-(k + t.order))
        return acc

    def series_coefficients(self, K: int) -> list[Fraction]:
        """Taylor coefficients c_0..c_K of the reconstruction, which must be rational."""
        inverses = {}
        for t in self.terms:
            if t.pole not in inverses:
                inverses[t.pole] = t.pole.inverse()
        # running w^-(k+1) per pole; term j needs w^-(k+j) = w^-(k+1) * w^-(j-1)
        running = {w: inv for w, inv in inverses.items()}
        offsets = {(t.pole, t.order): inverses[t.pole] ** (t.order - 1) for t in self.terms}
        out = []
        for k in range(K + 1):
            c = self.polynomial_part[k]
            for t in self.terms:
                weight = comb(k + t.order - 1, k)
                c = c + t.coefficient * running[t.pole] * offsets[(t.pole, t.order)] * weight
            for w in running:
                running[w] = running[w] * inverses[w]
            r = as_rational(c)
            if r is None:
                raise InternalIrrationality(f"reconstructed coefficient {k} is not rational")
            out.append(r)
        return out

    def reconstruct(self) -> RationalFunction:
        """Combine every term over the common denominator prod (pole - z)^order."""
        if not self.terms:
            return RationalFunction(self.polynomial_part)
        mult: dict[CyclotomicElement, int] = {}
        for t in self.terms:
            mult[t.pole] = max(mult.get(t.pole, 0), t.order)
        common = Polynomial([1])
        for w, e in mult.items():
            common = common * Polynomial([w, -1]) ** e
        num = self.polynomial_part * common
        for t in self.terms:
            cofactor = Polynomial([1])
            for w, e in mult.items():
                cofactor = cofactor * Polynomial([w, -1]) ** (e - t.order if w == t.pole else e)
            num = num + cofactor.scale(t.coefficient)
        return RationalFunction(num, common)


def _primitive_roots(d: int) -> list[CyclotomicElement]:
    return [root_of_unity(d, a) for a in range(d) if gcd(a, d) == 1]


def partial_fractions(f) -> PartialFractionForm:
    """Decompose f = P(z) + sum c (w - z)^-j over the roots of unity w.

    Each coefficient is read off the Taylor expansion of f * (w - z)^e at w,
    carried out inside Q(zeta_d) for a pole of order d.
    """
    f = as_rational_function(f)
    orders = _candidate_orders(f)
    f = f.normalized()
    if not f.is_rational():
        raise ValueError("partial_fractions needs rational coefficients")
    num, den = f.numerator.to_rational(), f.denominator.to_rational()
    if num.is_zero():
        return PartialFractionForm(Polynomial(), ())
    poly_part, rem = divmod(num, den)
    factors, rest = cyclotomic_factorization(den, orders)
    if rest.degree > 0:
        raise NonCyclotomicPole(f"denominator factor {rest!r} has roots that are not roots of unity")
    terms: list[PartialFractionTerm] = []
    for d in sorted(factors):
        e = factors[d]
        for w in _primitive_roots(d):
            lifted = den.scale(CyclotomicElement.constant(1, d))
            q = lifted
            for _ in range(e):
                q, r = q.divide_by_linear(w)
                if r != 0:
                    raise ArithmeticError("cyclotomic factor multiplicity mismatch")
            # f * (w - z)^e = (-1)^e rem / q ; expand both in u = w - z
            a = [c if i % 2 == 0 else -c for i, c in enumerate(rem.taylor_at(w, e))]
            b = [c if i % 2 == 0 else -c for i, c in enumerate(q.taylor_at(w, e))]
            g = series_divide(a, b, e)
            sign = -1 if e % 2 else 1
            for j in range(1, e + 1):
                c = g[e - j] * sign
                if c != 0:
                    terms.append(PartialFractionTerm(w, j, c, d))
    return PartialFractionForm(poly_part, tuple(terms))


@dataclass(frozen=True)
class Periodic:
    """Leading coefficient growth that oscillates with period ``len(cycle)``.

    ``cycle[r]`` is the leading constant along k = r (mod period).
    """

    cycle: tuple[Fraction, ...]

    @property
    def average(self) -> Fraction:
        return sum(self.cycle, Fraction(0)) / len(self.cycle)


def asymptotic_profile(f) -> tuple[int, Union[Fraction, Periodic]]:
    """Exponent m' and constant C with c_k ~ C k^m' for the Taylor coefficients of f.

    When the leading periodic sum is not constant, a :class:`Periodic` is
    returned instead of C.
    """
    f = as_rational_function(f)
    if f.is_zero():
        return 0, Fraction(0)
    pf = partial_fractions(f)
    top = pf.max_order()
    if top == 0:
        return 0, Fraction(0)
    m = top - 1
    leading = [t for t in pf.terms if t.order == top]
    period = 1
    for t in leading:
        period = _lcm(period, t.root_order)
    cycle = []
    for k in range(period):
        acc = Fraction(0)
        for t in leading:
            acc = acc + t.coefficient * t.pole ** (-(m + 1 + k))
        value = as_rational(acc)
        if value is None:
            raise InternalIrrationality("leading periodic sum is not rational")
        cycle.append(value / factorial(m))
    if all(v == cycle[0] for v in cycle):
        return m, cycle[0]
    return m, Periodic(tuple(cycle))
