"""Hilbert series of graded algebras: construction, validation, pole constraints."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import NotAHilbertSeries, ParseError
from .molien import FiniteMatrixGroup, molien_series
from .polyrat import (
    Polynomial,
    RationalFunction,
    _candidate_orders,
    cyclotomic_factorization,
    series_coefficients,
)

DEFAULT_VALIDATION_DEPTH = 64
SOURCES = ("hironaka", "molien", "raw")


@dataclass(frozen=True)
class HironakaData:
    """Degrees of a homogeneous system of parameters and of free module generators."""

    hsop_degrees: tuple[int, ...]
    generator_degrees: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.hsop_degrees)
        e = tuple(int(x) for x in self.generator_degrees)
        if not d or not e:
            raise ValueError("hsop_degrees and generator_degrees must be non-empty")
        if any(x < 1 for x in d):
            raise ValueError("hsop degrees must be positive")
        if any(x < 0 for x in e):
            raise ValueError("generator degrees must be non-negative")
        if e.count(0) > 1:
            raise ValueError("only one generator (the unit) may have degree 0")
        object.__setattr__(self, "hsop_degrees", d)
        object.__setattr__(self, "generator_degrees", e)

    @property
    def krull_dim(self) -> int:
        return len(self.hsop_degrees)

    @property
    def rank(self) -> int:
        return len(self.generator_degrees)

    def numerator(self) -> Polynomial:
        coeffs = [0] * (max(self.generator_degrees) + 1)
        for e in self.generator_degrees:
            coeffs[e] += 1
        return Polynomial(coeffs)

    def to_json(self) -> dict:
        return {"hsop_degrees": list(self.hsop_degrees), "generator_degrees": list(self.generator_degrees)}

    @classmethod
    def from_json(cls, doc: dict) -> "HironakaData":
        try:
            return cls(tuple(doc["hsop_degrees"]), tuple(doc["generator_degrees"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad Hironaka document: {exc}") from exc


@dataclass(frozen=True)
class HilbertSeries:
    function: RationalFunction
    ambient_dim: Optional[int] = None
    source: str = "raw"

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        if not self.function.is_rational():
            raise NotAHilbertSeries("Hilbert series must have rational coefficients")

    def coefficients(self, K: int) -> list[Fraction]:
        return series_coefficients(self.function, K)

    def validate(self, depth: int = DEFAULT_VALIDATION_DEPTH) -> "HilbertSeries":
        coeffs = self.coefficients(depth)
        if coeffs[0] != 1:
            raise NotAHilbertSeries(f"constant coefficient is {coeffs[0]}, expected 1")
        for k, c in enumerate(coeffs):
            if c.denominator != 1 or c < 0:
                raise NotAHilbertSeries(f"coefficient of z^{k} is {c}, not a non-negative integer")
        return self

    def to_json(self) -> dict:
        doc = dict(self.function.to_json())
        doc["source"] = self.source
        if self.ambient_dim is not None:
            doc["ambient_dim"] = self.ambient_dim
        return doc


def from_hironaka(data: HironakaData) -> HilbertSeries:
    f = RationalFunction.from_factored(data.numerator(), [(d, 1) for d in data.hsop_degrees])
    return HilbertSeries(f, None, "hironaka")


def from_molien(G: FiniteMatrixGroup, depth: int = DEFAULT_VALIDATION_DEPTH) -> HilbertSeries:
    return HilbertSeries(molien_series(G), G.dim, "molien").validate(depth)


def from_rational_function(
    f: RationalFunction, ambient_dim: Optional[int] = None, depth: int = DEFAULT_VALIDATION_DEPTH
) -> HilbertSeries:
    return HilbertSeries(f, ambient_dim, "raw").validate(depth)


def cyclotomic_pole_orders(f: RationalFunction) -> tuple[dict[int, int], Polynomial]:
    """Pole order at each primitive d-th root of unity, keyed by d, plus the non-cyclotomic rest."""
    orders = _candidate_orders(f)
    den = f.normalized().denominator.to_rational()
    return cyclotomic_factorization(den, orders)


@dataclass(frozen=True)
class CMReport:
    """Outcome of the Cohen-Macaulay pole constraints.

    ``offending`` lists ``(d, order)`` for primitive d-th roots breaking a bound.
    """

    m: int
    pole_at_one: bool
    roots_of_unity_only: bool
    minus_one_ok: bool
    others_ok: bool
    pole_orders: dict = field(default_factory=dict)
    offending: tuple = ()

    @property
    def passed(self) -> bool:
        return self.pole_at_one and self.roots_of_unity_only and self.minus_one_ok and self.others_ok

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "passed": self.passed,
            "pole_at_one": self.pole_at_one,
            "roots_of_unity_only": self.roots_of_unity_only,
            "minus_one_order_at_most_m_plus_1": self.minus_one_ok,
            "other_orders_at_most_m": self.others_ok,
            "pole_orders": {str(d): e for d, e in sorted(self.pole_orders.items())},
            "offending_poles": [{"root_order": d, "pole_order": e} for d, e in self.offending],
        }


def cm_pole_check(H) -> CMReport:
    """Check: pole of order m+1 at 1, order <= m+1 at -1, order <= m elsewhere."""
    f = H.function if isinstance(H, HilbertSeries) else H
    factors, rest = cyclotomic_pole_orders(f)
    at_one = factors.get(1, 0)
    m = at_one - 1 if at_one else 0
    offending = []
    minus_one_ok = True
    if factors.get(2, 0) > m + 1:
        minus_one_ok = False
        offending.append((2, factors[2]))
    others_ok = True
    for d in sorted(factors):
        if d > 2 and factors[d] > m:
            others_ok = False
            offending.append((d, factors[d]))
    return CMReport(
        m=m,
        pole_at_one=at_one > 0,
        roots_of_unity_only=rest.degree <= 0,
        minus_one_ok=minus_one_ok,
        others_ok=others_ok,
        pole_orders=dict(factors),
        offending=tuple(offending),
    )
