"""Named fixtures: finite groups, Hopf fibrations and Clifford foliations with known volume ratios."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import UnknownEntry
from .exactnum import root_of_unity
from .hilbert import HilbertSeries, HironakaData, from_hironaka, from_molien
from .molien import FiniteMatrixGroup, GroupElement, enumerate_group, group_document, parse_group_document


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    expected_m: int
    expected_ratio: Fraction
    ambient_n: int
    group: Optional[dict] = None
    hironaka: Optional[HironakaData] = None

    def __post_init__(self):
        if self.group is None and self.hironaka is None:
            raise ValueError(f"catalog entry {self.name} needs a group or Hironaka data")

    def enumerated_group(self) -> Optional[FiniteMatrixGroup]:
        if self.group is None:
            return None
        if self.name not in _GROUP_CACHE:
            gens, cap = parse_group_document(self.group)
            _GROUP_CACHE[self.name] = enumerate_group(gens, cap)
        return _GROUP_CACHE[self.name]

    def hilbert_series(self) -> HilbertSeries:
        """Hironaka form when available (keeps the factored denominator), else Molien."""
        if self.hironaka is not None:
            return from_hironaka(self.hironaka)
        return from_molien(self.enumerated_group())


_GROUP_CACHE: dict[str, FiniteMatrixGroup] = {}


def _rational_group(*matrices) -> dict:
    return group_document([GroupElement.from_rational(m) for m in matrices])


def trivial(n: int) -> CatalogEntry:
    ident = [[1 if i == j else 0 for j in range(n + 1)] for i in range(n + 1)]
    return CatalogEntry(
        name=f"trivial({n})",
        description=f"trivial foliation of S^{n} by points; X = S^{n}",
        expected_m=n,
        expected_ratio=Fraction(1),
        ambient_n=n,
        group=_rational_group(ident),
        hironaka=HironakaData((1,) * (n + 1), (0,)),
    )


def antipodal(n: int) -> CatalogEntry:
    neg = [[-1 if i == j else 0 for j in range(n + 1)] for i in range(n + 1)]
    # squares x_i^2 as parameters; even-degree squarefree monomials as module basis
    gens = tuple(2 * j for j in range(0, (n + 1) // 2 + 1) for _ in range(math.comb(n + 1, 2 * j)))
    return CatalogEntry(
        name=f"antipodal({n})",
        description=f"{{+I, -I}} acting on R^{n + 1}; X = RP^{n}",
        expected_m=n,
        expected_ratio=Fraction(1, 2),
        ambient_n=n,
        group=_rational_group(neg),
        hironaka=HironakaData((2,) * (n + 1), gens),
    )


def rotation_matrix(q: int) -> GroupElement:
    """Rotation of R^2 by 2 pi / q with entries in Q(zeta_lcm(4, q))."""
    N = 4 * q // math.gcd(4, q)
    zeta = root_of_unity(N, N // q)
    zeta_inv = root_of_unity(N, -(N // q))
    i = root_of_unity(N, N // 4)
    cos = (zeta + zeta_inv) / 2
    sin = (zeta - zeta_inv) / (2 * i)
    return GroupElement(N, ((cos, -sin), (sin, cos)))


def cyclic_rotation(q: int) -> CatalogEntry:
    if q < 1:
        raise UnknownEntry(f"cyclic_rotation needs q >= 1, got {q}")
    return CatalogEntry(
        name=f"cyclic_rotation({q})",
        description=f"cyclic group of rotations by 2pi/{q} on R^2",
        expected_m=1,
        expected_ratio=Fraction(1, q),
        ambient_n=1,
        group=group_document([rotation_matrix(q)]),
        # |z|^2 and Re z^q as parameters, basis 1 and Im z^q
        hironaka=HironakaData((2, q), (0, q)),
    )


def b2() -> CatalogEntry:
    return CatalogEntry(
        name="B2",
        description="signed permutations of R^2 (reflection group B2, order 8)",
        expected_m=1,
        expected_ratio=Fraction(1, 8),
        ambient_n=1,
        group=_rational_group([[0, -1], [1, 0]], [[1, 0], [0, -1]]),
        hironaka=HironakaData((2, 4), (0,)),
    )


def s3_perm() -> CatalogEntry:
    return CatalogEntry(
        name="S3_perm",
        description="symmetric group S3 permuting coordinates of R^3",
        expected_m=2,
        expected_ratio=Fraction(1, 6),
        ambient_n=2,
        group=_rational_group([[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
        hironaka=HironakaData((1, 2, 3), (0,)),
    )


def _hopf(name: str, field: str, base_dim: int) -> CatalogEntry:
    # m = l Clifford foliation: m+1 quadratic parameters, free of rank 2
    return CatalogEntry(
        name=name,
        description=f"{field} Hopf fibration S^{2 * base_dim - 1} -> S^{base_dim}(1/2)",
        expected_m=base_dim,
        expected_ratio=Fraction(2, 2 ** (base_dim + 1)),
        ambient_n=2 * base_dim - 1,
        hironaka=HironakaData((2,) * (base_dim + 1), (0, 2)),
    )


def clifford_module_dimension(m: int) -> int:
    """Smallest l admitting a Clifford system P_0..P_m on R^(2l)."""
    base = (1, 2, 4, 4, 8, 8, 8, 8)
    return base[(m - 1) % 8] * 16 ** ((m - 1) // 8)


def clifford(l: int, m: int) -> CatalogEntry:
    if m < 1 or m > l - 2:
        raise UnknownEntry(f"clifford(l, m) needs 1 <= m <= l - 2, got l={l}, m={m}")
    if l % clifford_module_dimension(m):
        raise UnknownEntry(f"no Clifford system with m={m} on R^{2 * l}")
    return CatalogEntry(
        name=f"clifford({l},{m})",
        description=f"Clifford foliation of S^{2 * l - 1}, m={m}; X = hemisphere of S^{m + 1}(1/2)",
        expected_m=m + 1,
        expected_ratio=Fraction(1, 2 ** (m + 2)),
        ambient_n=2 * l - 1,
        hironaka=HironakaData((2,) * (m + 2), (0,)),
    )


_FIXED = {
    "B2": b2,
    "S3_perm": s3_perm,
    "hopf_complex": lambda: _hopf("hopf_complex", "complex", 2),
    "hopf_quaternionic": lambda: _hopf("hopf_quaternionic", "quaternionic", 4),
    "hopf_octonionic": lambda: _hopf("hopf_octonionic", "octonionic", 8),
}

_FAMILIES = {
    "trivial": (trivial, 1),
    "antipodal": (antipodal, 1),
    "cyclic_rotation": (cyclic_rotation, 1),
    "clifford": (clifford, 2),
}

DEFAULT_NAMES = (
    "trivial(1)",
    "trivial(2)",
    "trivial(3)",
    "antipodal(1)",
    "antipodal(2)",
    "antipodal(3)",
    "cyclic_rotation(2)",
    "cyclic_rotation(3)",
    "cyclic_rotation(4)",
    "cyclic_rotation(5)",
    "cyclic_rotation(6)",
    "B2",
    "S3_perm",
    "hopf_complex",
    "hopf_quaternionic",
    "hopf_octonionic",
    "clifford(3,1)",
    "clifford(4,2)",
)

_NAME_RE = re.compile(r"^\s*([A-Za-z_]\w*)\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*$")


def list_entries() -> list[str]:
    return list(DEFAULT_NAMES)


def get_entry(name: str) -> CatalogEntry:
    """Look up a fixed entry ("B2") or a family member ("clifford(4,2)")."""
    if name in _FIXED:
        return _FIXED[name]()
    match = _NAME_RE.match(name)
    if match and match.group(1) in _FAMILIES:
        builder, arity = _FAMILIES[match.group(1)]
        args = [int(a) for a in match.group(2).split(",")]
        if len(args) == arity:
            return builder(*args)
    raise UnknownEntry(f"unknown catalog entry {name!r}")


def all_entries() -> list[CatalogEntry]:
    return [get_entry(name) for name in DEFAULT_NAMES]


def verify_entry(entry: CatalogEntry, depth: int = 200) -> dict[str, bool]:
    """Every exact check that applies to ``entry``; each value is pass/fail."""
    from .polyrat import Polynomial, asymptotic_profile, partial_fractions, series_coefficients
    from .spectrum import b_series_identity
    from .volume import ratio_from_hironaka, volume_ratio

    H = entry.hilbert_series()
    report = volume_ratio(H)
    checks = {
        "volume_ratio": (report.m, report.ratio) == (entry.expected_m, entry.expected_ratio),
        "cm_constraints": report.cm_report.passed,
    }
    if entry.hironaka is not None:
        checks["hironaka_formula"] = ratio_from_hironaka(entry.hironaka) == (report.m, report.ratio)
        checks["ratio_denominator_divides_degrees"] = (
            math.prod(entry.hironaka.hsop_degrees) * entry.hironaka.rank
        ) % report.ratio.denominator == 0
    G = entry.enumerated_group()
    if G is not None:
        Hm = from_molien(G)
        checks["molien_volume_ratio"] = volume_ratio(Hm).ratio == entry.expected_ratio
        checks["ratio_is_inverse_order"] = entry.expected_ratio == Fraction(1, G.order)
        if entry.hironaka is not None:
            checks["molien_equals_hironaka"] = Hm.function == H.function
    bH = H.function * Polynomial([1, 1])
    pf = partial_fractions(bH)
    checks["partial_fraction_reconstruction"] = (
        pf.reconstruct() == bH and pf.series_coefficients(depth) == series_coefficients(bH, depth)
    )
    checks["asymptotic_profile"] = asymptotic_profile(bH) == (
        report.m,
        2 * report.ratio / math.factorial(report.m),
    )
    checks["b_series_identity"] = b_series_identity(H, entry.ambient_n, depth)
    return checks
