"""Basic spectrum of a foliated round sphere, read off its Hilbert series.

Degree-k basic harmonics restrict to eigenfunctions with eigenvalue
k(k+n-1) on S^n; their multiplicities are the Taylor coefficients of
(1 - z^2) H(z).

Counting convention: ``counting_function(spec, t)`` is the number of basic
eigenvalues, with multiplicity, strictly below ``t``. That is one more than
the largest index i with lambda_i < t; the asymptotics are the same.
"""

from __future__ import annotations

import bisect
import decimal
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import NegativeMultiplicity, NotAHilbertSeries, TailNotNegligible, TruncationTooSmall
from .hilbert import HilbertSeries
from .polyrat import Polynomial, series_coefficients
from .volume import VolumeReport

TAIL_RELATIVE_LIMIT = 1e-6


def eigenvalue(n: int, k: int) -> int:
    return k * (k + n - 1)


def harmonic_dimension(n: int, k: int) -> int:
    """dim of degree-k harmonic polynomials in n+1 variables (eigenspace on S^n)."""
    if k < 0:
        return 0
    full = math.comb(k + n, n)
    return full - (math.comb(k + n - 2, n) if k >= 2 else 0)


@dataclass(frozen=True)
class BasicSpectrum:
    ambient_n: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if self.ambient_n < 1:
            raise ValueError("ambient sphere dimension must be >= 1")
        if not self.multiplicities:
            raise ValueError("empty spectrum")
        object.__setattr__(self, "multiplicities", tuple(int(x) for x in self.multiplicities))
        eigs = [eigenvalue(self.ambient_n, k) for k in range(len(self.multiplicities))]
        prefix = [0]
        for m in self.multiplicities:
            prefix.append(prefix[-1] + m)
        object.__setattr__(self, "_eigs", eigs)
        object.__setattr__(self, "_prefix", prefix)

    @property
    def K(self) -> int:
        return len(self.multiplicities) - 1

    def eigenvalue(self, k: int) -> int:
        return eigenvalue(self.ambient_n, k)

    @property
    def coverage(self) -> int:
        """Largest t for which the truncated spectrum gives the exact count below t."""
        return eigenvalue(self.ambient_n, self.K + 1)

    def prefix_sums(self) -> list[int]:
        return self._prefix[1:]

    @classmethod
    def from_hilbert_coefficients(cls, coeffs: Sequence, n: int) -> "BasicSpectrum":
        """m_k = dim A_k - dim A_(k-2), straight from a list of Hilbert coefficients."""
        mults = []
        for k, c in enumerate(coeffs):
            m = Fraction(c) - (Fraction(coeffs[k - 2]) if k >= 2 else 0)
            mults.append(_check_multiplicity(k, m))
        return cls(n, tuple(mults))


def _check_multiplicity(k: int, m: Fraction) -> int:
    if m < 0:
        raise NegativeMultiplicity(
            f"degree-{k} harmonic multiplicity is {m}; not the Hilbert series of a Laplacian algebra"
        )
    if m.denominator != 1:
        raise NotAHilbertSeries(f"degree-{k} harmonic multiplicity {m} is not an integer")
    return int(m)


def harmonic_multiplicities(H, n: int, K: int) -> BasicSpectrum:
    """Multiplicities m_0..m_K as Taylor coefficients of (1 - z^2) H(z)."""
    f = H.function if isinstance(H, HilbertSeries) else H
    g = f * Polynomial([1, 0, -1])
    coeffs = series_coefficients(g, K)
    return BasicSpectrum(n, tuple(_check_multiplicity(k, Fraction(c)) for k, c in enumerate(coeffs)))


def counting_function(spec: BasicSpectrum, t) -> int:
    """Number of basic eigenvalues (with multiplicity) strictly below t."""
    if t > spec.coverage:
        raise TruncationTooSmall(f"t = {t} exceeds spectrum coverage {spec.coverage}")
    if t <= 0:
        return 0
    idx = bisect.bisect_left(spec._eigs, t)
    return spec._prefix[idx]


@dataclass(frozen=True)
class WeylRow:
    k: int
    t: int
    N: int
    ratio: float

    def to_json(self) -> dict:
        return {"k": self.k, "t": self.t, "N": self.N, "ratio": self.ratio}


def weyl_prediction(report: VolumeReport, t) -> float:
    """A * t^(m/2) in floating point."""
    m = report.m
    if m % 2 == 0:
        return float(report.weyl_constant * Fraction(t) ** (m // 2))
    return float(report.weyl_constant * Fraction(t) ** (m // 2)) * math.sqrt(t)


def weyl_relative_error(N: int, report: VolumeReport, t: int):
    """|N / (A t^(m/2)) - 1|, exact (a Fraction) whenever t^(m/2) is rational.

    Otherwise a 60-digit Decimal, so that exact ties between table rows are
    never blurred by float rounding.
    """
    m, A = report.m, report.weyl_constant
    half = Fraction(t) ** (m // 2)
    if m % 2 == 0:
        return abs(Fraction(N) / (A * half) - 1)
    root = math.isqrt(t)
    if root * root == t:
        return abs(Fraction(N) / (A * half * root) - 1)
    with decimal.localcontext() as ctx:
        ctx.prec = 60
        denom = decimal.Decimal(A.numerator) / decimal.Decimal(A.denominator)
        denom *= decimal.Decimal(half.numerator) * decimal.Decimal(t).sqrt()
        return abs(decimal.Decimal(N) / denom - 1)


def default_rows(K: int) -> list[int]:
    ks, base = [], 1
    while base <= K:
        for mult in (1, 2, 3, 5):
            k = mult * base
            if k <= K:
                ks.append(k)
        base *= 10
    if K >= 1 and K not in ks:
        ks.append(K)
    return sorted(set(ks))


def weyl_table(
    spec: BasicSpectrum, report: VolumeReport, K: int, ks: Optional[Iterable[int]] = None
) -> list[WeylRow]:
    """Rows (k, lambda_k, N(lambda_k), N / (A lambda_k^(m/2))) for k <= K."""
    rows = []
    for k in (default_rows(K) if ks is None else ks):
        if k < 1 or k > K:
            continue
        t = spec.eigenvalue(k)
        N = counting_function(spec, t)
        rows.append(WeylRow(k, t, N, N / weyl_prediction(report, t)))
    return rows


def b_series_identity(H, n: int, K: int, spectrum: Optional[BasicSpectrum] = None) -> bool:
    """Taylor coefficients b_k of (1+z)H against prefix sums of the multiplicities.

    Also checks b_k = N(lambda_k + 1/2), the count up to and including lambda_k.
    Pass ``spectrum`` to test a spectrum obtained some other way.
    """
    f = H.function if isinstance(H, HilbertSeries) else H
    b = series_coefficients(f * Polynomial([1, 1]), K)
    if spectrum is None:
        spectrum = harmonic_multiplicities(f, n, K)
    if spectrum.K < K or spectrum.ambient_n != n:
        return False
    prefix = spectrum.prefix_sums()
    for k in range(K + 1):
        if b[k] != prefix[k]:
            return False
        if counting_function(spectrum, spectrum.eigenvalue(k) + Fraction(1, 2)) != b[k]:
            return False
    return True


# -- heat trace -------------------------------------------------------------------


def heat_tail_bound(n: int, s: float, K: int) -> float:
    """Upper bound on sum_{k > K} m_k exp(-s lambda_k), using m_k <= C(k+n, n).

    The bounding terms have ratio (k+n+1)/(k+1) * exp(-s(2k+n)), decreasing
    in k, so a geometric series dominates the tail once that ratio is < 1.
    """
    k0 = K + 1
    ratio = (k0 + n + 1) / (k0 + 1) * math.exp(-s * (2 * k0 + n))
    if ratio >= 1:
        return math.inf
    log_first = math.log(math.comb(k0 + n, n)) - s * eigenvalue(n, k0)
    return math.exp(log_first) / (1 - ratio)


def heat_truncation(n: int, s: float, tol: float = 1e-10) -> int:
    """Smallest K whose heat-trace tail bound is below ``tol``."""
    lo, hi = 1, 1
    while heat_tail_bound(n, s, hi) > tol:
        lo, hi = hi, hi * 2
    while lo < hi:
        mid = (lo + hi) // 2
        if heat_tail_bound(n, s, mid) > tol:
            lo = mid + 1
        else:
            hi = mid
    return hi


@dataclass(frozen=True)
class HeatTrace:
    s: float
    value: float
    truncation_bound: float


def heat_trace(spec: BasicSpectrum, s: float) -> HeatTrace:
    """Z(s) = sum_k m_k exp(-s k(k+n-1)) over the truncated spectrum, with a tail bound."""
    if s <= 0:
        raise ValueError("heat trace needs s > 0")
    n = spec.ambient_n
    value = math.fsum(m * math.exp(-s * lam) for m, lam in zip(spec.multiplicities, spec._eigs) if m)
    bound = heat_tail_bound(n, s, spec.K)
    if bound > TAIL_RELATIVE_LIMIT * value:
        raise TailNotNegligible(
            f"tail bound {bound:.3g} exceeds {TAIL_RELATIVE_LIMIT:g} of Z(s) = {value:.6g}; raise K"
        )
    return HeatTrace(s, value, bound)


def gamma_half_integer(m: int) -> tuple[Fraction, bool]:
    """Gamma(m/2 + 1) as (q, has_sqrt_pi), meaning q * sqrt(pi) when the flag is set."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m % 2 == 0:
        return Fraction(math.factorial(m // 2)), False
    j = (m + 1) // 2
    # Gamma(j + 1/2) = (2j)! / (4^j j!) sqrt(pi)
    return Fraction(math.factorial(2 * j), 4 ** j * math.factorial(j)), True


def heat_target(report: VolumeReport) -> float:
    """A * Gamma(m/2 + 1), the s -> 0 limit of Z(s) s^(m/2)."""
    q, sqrt_pi = gamma_half_integer(report.m)
    value = float(report.weyl_constant * q)
    return value * math.sqrt(math.pi) if sqrt_pi else value


def scaled_heat_trace(ht: HeatTrace, m: int) -> float:
    return ht.value * ht.s ** (m / 2)
