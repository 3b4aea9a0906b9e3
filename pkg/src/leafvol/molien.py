"""Finite matrix groups over Q(zeta_N) and their Molien series."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import GroupTooLarge, InternalIrrationality, NotInvertible, ParseError
from .exactnum import CyclotomicElement, totient
from .polyrat import Polynomial, RationalFunction, poly_gcd

DEFAULT_CAP = 10_000


@dataclass(frozen=True)
class GroupElement:
    """Square matrix with entries in Q(zeta_conductor); hashable by canonical coefficients."""

    conductor: int
    rows: tuple[tuple[CyclotomicElement, ...], ...]

    def __post_init__(self):
        size = len(self.rows)
        if size == 0 or any(len(r) != size for r in self.rows):
            raise ValueError("group elements must be square and non-empty")
        rows = tuple(
            tuple(CyclotomicElement._coerce(x).embed(self.conductor) for x in r) for r in self.rows
        )
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rational(cls, rows: Sequence[Sequence], conductor: int = 1) -> "GroupElement":
        return cls(conductor, tuple(tuple(CyclotomicElement.constant(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, size: int, conductor: int = 1) -> "GroupElement":
        return cls.from_rational(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)], conductor
        )

    @property
    def size(self) -> int:
        return len(self.rows)

    def key(self) -> tuple:
        return tuple(x.coeffs for r in self.rows for x in r)

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.conductor == other.conductor and self.key() == other.key()

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        n = self.size
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = CyclotomicElement.constant(0, self.conductor)
                for a, b in zip(r, c):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return GroupElement(self.conductor, tuple(out))

    def trace(self) -> CyclotomicElement:
        acc = CyclotomicElement.constant(0, self.conductor)
        for i in range(self.size):
            acc = acc + self.rows[i][i]
        return acc

    def determinant(self) -> CyclotomicElement:
        # Gaussian elimination over the field
        m = [list(r) for r in self.rows]
        n = self.size
        det = CyclotomicElement.constant(1, self.conductor)
        for col in range(n):
            pivot = next((i for i in range(col, n) if not m[i][col].is_zero()), None)
            if pivot is None:
                return CyclotomicElement.constant(0, self.conductor)
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det
            p = m[col][col]
            det = det * p
            inv = p.inverse()
            for i in range(col + 1, n):
                if m[i][col].is_zero():
                    continue
                factor = m[i][col] * inv
                m[i] = [a - factor * b for a, b in zip(m[i], m[col])]
        return det

    def to_json(self) -> list:
        return [[x.to_strings() for x in r] for r in self.rows]


@dataclass(frozen=True)
class FiniteMatrixGroup:
    dim: int
    conductor: int
    elements: tuple[GroupElement, ...]
    generators: tuple[GroupElement, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)


def enumerate_group(generators: Sequence[GroupElement], cap: int = DEFAULT_CAP) -> FiniteMatrixGroup:
    """Breadth-first closure of ``generators`` under multiplication.

    Element order is insertion order, so output is deterministic.
    """
    gens = tuple(generators)
    if not gens:
        raise ValueError("need at least one generator")
    size, conductor = gens[0].size, gens[0].conductor
    for g in gens:
        if g.size != size or g.conductor != conductor:
            raise ValueError("generators must share size and conductor")
        if g.determinant().is_zero():
            raise NotInvertible("singular generator")
    ident = GroupElement.identity(size, conductor)
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x @ g
            if y not in seen:
                if len(order) >= cap:
                    raise GroupTooLarge(f"closure exceeds cap of {cap} elements")
                seen.add(y)
                order.append(y)
                queue.append(y)
    return FiniteMatrixGroup(size, conductor, tuple(order), gens)


def char_det(g: GroupElement) -> Polynomial:
    """det(I - z g) via Faddeev-LeVerrier on g."""
    n = g.size
    zero = CyclotomicElement.constant(0, g.conductor)
    # c[k] = coefficient of x^(n-k) in det(x I - g); det(I - z g) = sum c[k] z^k
    c = [CyclotomicElement.constant(1, g.conductor)]
    m = [[zero] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = g (M_{k-1} + c_{k-1} I)
        shifted = [
            [m[i][j] + c[-1] if i == j else m[i][j] for j in range(n)] for i in range(n)
        ]
        m = (g @ GroupElement(g.conductor, tuple(tuple(r) for r in shifted))).rows
        tr = zero
        for i in range(n):
            tr = tr + m[i][i]
        c.append(-tr / k)
    return Polynomial(c)


def molien_series(G: FiniteMatrixGroup) -> RationalFunction:
    """(1/|G|) sum_g 1/det(I - z g), summed exactly and returned over Q."""
    # elements sharing det(I - z g) contribute identical terms
    counts = Counter(char_det(g) for g in G.elements)
    num, den = Polynomial(), Polynomial([1])
    for p in sorted(counts, key=lambda p: (p.degree, repr(p))):
        mult = Fraction(counts[p])
        num = num * p + den.scale(mult)
        den = den * p
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
    c0 = den[0]
    scale = 1 / (c0 * G.order)
    num, den = num.scale(scale), den.scale(1 / c0)
    try:
        result = RationalFunction(num.to_rational(), den.to_rational())
    except InternalIrrationality as exc:
        raise InternalIrrationality(f"Molien sum left Q: {exc}") from exc
    return result


# -- input documents -----------------------------------------------------------------


def parse_group_document(doc: dict) -> tuple[list[GroupElement], int]:
    """Generators and cap from ``{"conductor", "dim", "cap"?, "generators"}``."""
    try:
        conductor = int(doc["conductor"])
        dim = int(doc["dim"])
        cap = int(doc.get("cap", DEFAULT_CAP))
        phi = totient(conductor)
        gens = []
        for mat in doc["generators"]:
            if len(mat) != dim or any(len(r) != dim for r in mat):
                raise ValueError(f"generator is not {dim}x{dim}")
            rows = []
            for r in mat:
                entries = []
                for e in r:
                    if isinstance(e, (str, int)):
                        e = [e] + ["0"] * (phi - 1)
                    entries.append(CyclotomicElement.from_strings(conductor, e))
                rows.append(tuple(entries))
            gens.append(GroupElement(conductor, tuple(rows)))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad group document: {exc}") from exc
    if not gens:
        raise ParseError("group document has no generators")
    return gens, cap


def group_document(generators: Iterable[GroupElement], cap: int | None = None) -> dict:
    gens = list(generators)
    doc = {"conductor": gens[0].conductor, "dim": gens[0].size}
    if cap is not None:
        doc["cap"] = cap
    doc["generators"] = [g.to_json() for g in gens]
    return doc
