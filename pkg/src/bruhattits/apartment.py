"""Rational points of the apartment, finite bounded sets, and the alcove.

Points are stored by their coordinates in the fundamental-coweight basis, so
``r(theta)`` is the dot product of the root's simple-root coefficients with
``coords``.  A bounded set is kept as the finite list of its vertices: every
root is linear, so an infimum over the convex hull is a minimum over the list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._exact import denominator_lcm, fmt, inverse, to_fraction
from .errors import EmptySet, EmptySubset, IndexOutOfRange, ParseError, RankMismatch
from .rootsystem import DynkinType, Root, build_root_system, pairing


@dataclass(frozen=True)
class ApartmentPoint:
    dynkin: DynkinType
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "dynkin", DynkinType.parse(self.dynkin))
        coords = tuple(to_fraction(c) for c in self.coords)
        if len(coords) != self.dynkin.rank:
            raise RankMismatch(
                f"{self.dynkin} needs {self.dynkin.rank} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def origin(cls, dynkin) -> "ApartmentPoint":
        dynkin = DynkinType.parse(dynkin)
        return cls(dynkin, (0,) * dynkin.rank)

    @classmethod
    def coweight(cls, dynkin, i: int, scale=1) -> "ApartmentPoint":
        """``scale * omega_i^vee`` (1-based index)."""
        dynkin = DynkinType.parse(dynkin)
        if not 1 <= i <= dynkin.rank:
            raise IndexOutOfRange(f"coweight index {i} outside 1..{dynkin.rank}")
        return cls(dynkin, tuple(to_fraction(scale) if j == i - 1 else 0
                                 for j in range(dynkin.rank)))

    @classmethod
    def parse(cls, dynkin, text: str | Sequence) -> "ApartmentPoint":
        """From ``"1/9,0"`` or a JSON-style list of rationals."""
        if isinstance(text, str):
            parts = [p for p in text.strip().strip("[]").split(",") if p.strip()]
            parts = [p.strip().strip('"') for p in parts]
        else:
            parts = list(text)
        return cls(dynkin, tuple(to_fraction(p) for p in parts))

    def _check(self, other: "ApartmentPoint"):
        if other.dynkin != self.dynkin:
            raise RankMismatch(f"{self.dynkin} vs {other.dynkin}")

    def __add__(self, other: "ApartmentPoint") -> "ApartmentPoint":
        self._check(other)
        return ApartmentPoint(self.dynkin, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "ApartmentPoint") -> "ApartmentPoint":
        self._check(other)
        return ApartmentPoint(self.dynkin, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "ApartmentPoint":
        return ApartmentPoint(self.dynkin, tuple(-a for a in self.coords))

    def scale(self, k) -> "ApartmentPoint":
        k = to_fraction(k)
        return ApartmentPoint(self.dynkin, tuple(k * a for a in self.coords))

    def __mul__(self, k):
        return self.scale(k)

    __rmul__ = __mul__

    def to_json(self) -> list[str]:
        return [fmt(c) for c in self.coords]

    def __str__(self):
        return "[" + ",".join(fmt(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class BoundedSet:
    points: tuple[ApartmentPoint, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        if not pts:
            raise EmptySet("a bounded set needs at least one point")
        for p in pts[1:]:
            pts[0]._check(p)
        object.__setattr__(self, "points", pts)

    @property
    def dynkin(self) -> DynkinType:
        return self.points[0].dynkin

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def to_json(self) -> list[list[str]]:
        return [p.to_json() for p in self.points]

    @classmethod
    def parse(cls, dynkin, data: Iterable) -> "BoundedSet":
        return cls(tuple(ApartmentPoint.parse(dynkin, p) for p in data))


def _check_root(r: Sequence[int], theta: ApartmentPoint):
    if len(r) != theta.dynkin.rank:
        raise RankMismatch(f"root of rank {len(r)} against {theta.dynkin}")


def m_point(r: Root, theta: ApartmentPoint) -> int:
    """``-floor(r(theta))``."""
    _check_root(r, theta)
    return -math.floor(pairing(r, theta))


def m_set(r: Root, omega: BoundedSet) -> int:
    """``-floor(min over omega of r(theta))``."""
    if not len(omega):
        raise EmptySet("empty bounded set")
    for theta in omega:
        _check_root(r, theta)
    return -math.floor(min(pairing(r, theta) for theta in omega))


def alcove_vertices(dynkin) -> list[ApartmentPoint]:
    """The nonzero vertices ``omega_i^vee / c_i``; the origin is the remaining one."""
    rs = build_root_system(dynkin)
    return [ApartmentPoint.coweight(rs.dynkin, i + 1, Fraction(1, c))
            for i, c in enumerate(rs.highest)]


def in_closed_alcove(theta: ApartmentPoint) -> bool:
    rs = build_root_system(theta.dynkin)
    return all(c >= 0 for c in theta.coords) and pairing(rs.highest, theta) <= 1


def denominator(theta: ApartmentPoint) -> int:
    """Least ``d >= 1`` with ``d * theta`` in the coroot lattice.

    Coroot ``alpha_i^vee`` is row ``i`` of the Cartan matrix, so ``theta``
    has coroot coordinates ``coords * C^{-1}``.
    """
    rs = build_root_system(theta.dynkin)
    cinv = inverse(rs.cartan)
    n = rs.rank
    x = [sum(theta.coords[i] * cinv[i][j] for i in range(n)) for j in range(n)]
    return denominator_lcm(x)


def d_alpha(dynkin, i: int) -> int:
    """``e_i * c_i``: order of ``omega_i^vee`` modulo coroots, times the
    highest-root coefficient (1-based index)."""
    rs = build_root_system(dynkin)
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"simple root index {i} outside 1..{rs.rank}")
    e = denominator(ApartmentPoint.coweight(rs.dynkin, i))
    return e * rs.highest[i - 1]


def barycenter(dynkin, subset: Iterable[int]) -> ApartmentPoint:
    """Mean of the alcove vertices indexed by ``subset`` of {0, 1, ..., l};
    index 0 is the affine simple root, whose vertex is the origin."""
    dynkin = DynkinType.parse(dynkin)
    idx = sorted(set(subset))
    if not idx:
        raise EmptySubset("barycenter of an empty facet")
    verts = [ApartmentPoint.origin(dynkin)] + alcove_vertices(dynkin)
    for i in idx:
        if not 0 <= i <= dynkin.rank:
            raise IndexOutOfRange(f"affine simple root index {i} outside 0..{dynkin.rank}")
    total = ApartmentPoint.origin(dynkin)
    for i in idx:
        total = total + verts[i]
    return total.scale(Fraction(1, len(idx)))


def reflect(theta: ApartmentPoint, i: int) -> ApartmentPoint:
    """Simple reflection ``s_i`` (1-based): ``theta - alpha_i(theta) alpha_i^vee``."""
    rs = build_root_system(theta.dynkin)
    a = theta.coords[i - 1]
    row = rs.cartan[i - 1]
    return ApartmentPoint(theta.dynkin, tuple(c - a * k for c, k in zip(theta.coords, row)))


def _gram(rs) -> list[list[Fraction]]:
    """Inner products ``(alpha_i, alpha_j)`` up to a common positive scale."""
    n = rs.rank
    c = rs.cartan
    # (alpha_i, alpha_j) = d_i c_ij with d_i = |alpha_i|^2 / 2; solve d_i c_ij = d_j c_ji
    d = [None] * n
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i != j and c[i][j] and d[i] is not None and d[j] is None:
                    d[j] = d[i] * c[i][j] / c[j][i]
                    changed = True
    return [[d[i] * c[i][j] for j in range(n)] for i in range(n)]


def _highest_coroot(rs) -> tuple[Fraction, ...]:
    """``alpha~^vee`` in coweight coordinates, i.e. ``<alpha_j, alpha~^vee>``."""
    g = _gram(rs)
    n = rs.rank
    h = rs.highest
    dots = [sum(h[i] * g[i][j] for i in range(n)) for j in range(n)]
    norm = sum(h[j] * dots[j] for j in range(n))
    return tuple(2 * x / norm for x in dots)


def alcove_reduce(theta: ApartmentPoint) -> ApartmentPoint:
    """Representative of the affine-Weyl orbit of ``theta`` in the closed
    fundamental alcove."""
    rs = build_root_system(theta.dynkin)
    top_coroot = _highest_coroot(rs)
    current = theta
    while True:
        neg = next((i for i, c in enumerate(current.coords) if c < 0), None)
        if neg is not None:
            current = reflect(current, neg + 1)
            continue
        h = pairing(rs.highest, current)
        if h > 1:
            # s_{alpha~}(theta) + alpha~^vee = theta - (h - 1) alpha~^vee
            current = ApartmentPoint(
                current.dynkin,
                tuple(c - (h - 1) * k for c, k in zip(current.coords, top_coroot)))
            continue
        return current


def parse_points(dynkin, texts: Iterable[str]) -> list[ApartmentPoint]:
    out = []
    for s in texts:
        try:
            out.append(ApartmentPoint.parse(dynkin, s))
        except RankMismatch:
            raise
        except Exception as exc:  # noqa: BLE001
            raise ParseError(f"bad point {s!r}") from exc
    return out
