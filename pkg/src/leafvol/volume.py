"""Leaf-space dimension and exact volume ratio from a Hilbert series."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NoPoleAtOne
from .exactnum import format_rational
from .hilbert import CMReport, HilbertSeries, HironakaData, cm_pole_check
from .polyrat import laurent_at_one


@dataclass(frozen=True)
class ExactConstant:
    """rational * pi**pi_power."""

    rational: Fraction
    pi_power: int = 0

    def __post_init__(self):
        r = Fraction(self.rational)
        if self.pi_power < 0:
            raise ValueError("pi_power must be non-negative")
        object.__setattr__(self, "rational", r)
        if r == 0:
            object.__setattr__(self, "pi_power", 0)

    def __mul__(self, other):
        if isinstance(other, ExactConstant):
            return ExactConstant(self.rational * other.rational, self.pi_power + other.pi_power)
        if isinstance(other, (int, Fraction)):
            return ExactConstant(self.rational * other, self.pi_power)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactConstant(self.rational / other, self.pi_power)
        if isinstance(other, ExactConstant) and other.pi_power <= self.pi_power:
            return ExactConstant(self.rational / other.rational, self.pi_power - other.pi_power)
        return NotImplemented

    def __float__(self):
        return float(self.rational) * math.pi ** self.pi_power

    def to_json(self) -> dict:
        return {"rational": format_rational(self.rational), "pi_power": self.pi_power}


@lru_cache(maxsize=None)
def _volumes(m: int) -> tuple[ExactConstant, ExactConstant]:
    # (vol S^m, vol D^m) from omega_0 = 1, vol S^0 = 2
    if m == 0:
        return ExactConstant(2), ExactConstant(1)
    sphere_prev, ball_prev = _volumes(m - 1)
    ball = sphere_prev / m
    sphere = ExactConstant(2, 1) * ball_prev
    return sphere, ball


def sphere_volume(m: int) -> ExactConstant:
    """Volume of the unit sphere S^m in R^(m+1)."""
    if m < 0:
        raise ValueError("dimension must be non-negative")
    return _volumes(m)[0]


def ball_volume(m: int) -> ExactConstant:
    """Volume of the unit ball D^m in R^m."""
    if m < 0:
        raise ValueError("dimension must be non-negative")
    return _volumes(m)[1]


def weyl_constant(m: int, ratio: Fraction) -> Fraction:
    """vol(X) omega_m / (2 pi)^m for vol(X) = ratio * vol(S^m); the pi's cancel."""
    return 2 * Fraction(ratio) / math.factorial(m)


@dataclass(frozen=True)
class VolumeReport:
    m: int
    ratio: Fraction
    krull_dim: int
    leading_laurent: Fraction
    weyl_constant: Fraction
    absolute_volume: ExactConstant
    cm_report: CMReport
    warning: bool

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "ratio": format_rational(self.ratio),
            "krull_dim": self.krull_dim,
            "leading_laurent": format_rational(self.leading_laurent),
            "weyl_constant": format_rational(self.weyl_constant),
            "absolute_volume": self.absolute_volume.to_json(),
            "warning": self.warning,
        }


def volume_ratio(H: HilbertSeries) -> VolumeReport:
    """m = (pole order at 1) - 1 and Vol(X)/Vol(S^m) = leading Laurent coefficient."""
    order, coeffs = laurent_at_one(H.function, 0)
    if order == 0:
        raise NoPoleAtOne("Hilbert series is regular at z = 1")
    m = order - 1
    lead = coeffs[0]
    cm = cm_pole_check(H)
    return VolumeReport(
        m=m,
        ratio=lead,
        krull_dim=order,
        leading_laurent=lead,
        weyl_constant=weyl_constant(m, lead),
        absolute_volume=sphere_volume(m) * lead,
        cm_report=cm,
        warning=not cm.passed,
    )


def ratio_from_hironaka(data: HironakaData) -> tuple[int, Fraction]:
    """(m, rank / product of parameter degrees)."""
    return data.krull_dim - 1, Fraction(data.rank, math.prod(data.hsop_degrees))
