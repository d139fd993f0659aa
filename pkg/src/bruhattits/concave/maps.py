"""Concave maps on Phi union {0} and their elementary constructions."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .._exact import fmt, to_fraction
from ..apartment import ApartmentPoint, BoundedSet, m_point, m_set
from ..errors import EmptySubset, IndexOutOfRange, NegativeDepth, NotConcave, ParseError, RankMismatch
from ..rootsystem import DynkinType, Root, build_root_system, pairing, parse_root, root_key


@dataclass(frozen=True)
class ConcaveMap:
    """A total map ``Phi u {0} -> Q``.

    ``values`` is aligned with ``build_root_system(dynkin).roots`` (positives in
    canonical order, then their negatives); ``zero`` is the value at 0.  The
    name reflects intended use: nothing here enforces concavity.
    """

    dynkin: DynkinType
    values: tuple[Fraction, ...]
    zero: Fraction = Fraction(0)

    def __post_init__(self):
        dynkin = DynkinType.parse(self.dynkin)
        object.__setattr__(self, "dynkin", dynkin)
        vals = tuple(to_fraction(v) for v in self.values)
        n = len(build_root_system(dynkin).roots)
        if len(vals) != n:
            raise RankMismatch(f"{dynkin} has {n} roots, got {len(vals)} values")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "zero", to_fraction(self.zero))

    @property
    def root_system(self):
        return build_root_system(self.dynkin)

    def __getitem__(self, root: Sequence[int]) -> Fraction:
        root = tuple(root)
        if not any(root):
            return self.zero
        return self.values[self.root_system.index(root)]

    def items(self):
        return zip(self.root_system.roots, self.values)

    @classmethod
    def from_mapping(cls, dynkin, mapping: Mapping, zero=0) -> "ConcaveMap":
        rs = build_root_system(dynkin)
        table = {tuple(k): v for k, v in mapping.items()}
        missing = [r for r in rs.roots if r not in table]
        if missing:
            raise ParseError(f"no value for roots {[list(r) for r in missing]}")
        return cls(rs.dynkin, tuple(table[r] for r in rs.roots), zero)

    @classmethod
    def from_tables(cls, dynkin, positive: Sequence, negative: Sequence, zero=0) -> "ConcaveMap":
        """Values over Phi^+ in canonical order, then over the corresponding
        negatives."""
        return cls(dynkin, tuple(positive) + tuple(negative), zero)

    @classmethod
    def constant(cls, dynkin, value=0, zero=0) -> "ConcaveMap":
        rs = build_root_system(dynkin)
        return cls(rs.dynkin, (value,) * len(rs.roots), zero)

    @property
    def positive_values(self) -> tuple[Fraction, ...]:
        return self.values[: len(self.values) // 2]

    @property
    def negative_values(self) -> tuple[Fraction, ...]:
        return self.values[len(self.values) // 2:]

    def is_integral(self) -> bool:
        return self.zero.denominator == 1 and all(v.denominator == 1 for v in self.values)

    def __add__(self, other: "ConcaveMap") -> "ConcaveMap":
        if other.dynkin != self.dynkin:
            raise RankMismatch(f"{self.dynkin} vs {other.dynkin}")
        return ConcaveMap(self.dynkin,
                          tuple(a + b for a, b in zip(self.values, other.values)),
                          self.zero + other.zero)

    def __le__(self, other: "ConcaveMap") -> bool:
        return self.zero <= other.zero and all(a <= b for a, b in zip(self.values, other.values))

    def differences(self, other: "ConcaveMap") -> list[Root]:
        return [r for (r, a), b in zip(self.items(), other.values) if a != b]

    def to_json(self) -> dict:
        return {
            "type": str(self.dynkin),
            "zero": fmt(self.zero),
            "values": {root_key(r): fmt(v) for r, v in self.items()},
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "ConcaveMap":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            dynkin = DynkinType.parse(data["type"])
            values = {parse_root(k): to_fraction(v) for k, v in data["values"].items()}
            zero = to_fraction(data.get("zero", "0"))
        except (KeyError, TypeError, AttributeError) as exc:
            raise ParseError(f"malformed concave map JSON: {exc}") from exc
        return cls.from_mapping(dynkin, values, zero)


@dataclass(frozen=True)
class ConcaveTuple:
    """An n-concave function ``(f_1, ..., f_n)``; all entries share a type."""

    entries: tuple[ConcaveMap, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise EmptySubset("a concave tuple needs at least one entry")
        if any(f.dynkin != entries[0].dynkin for f in entries):
            raise RankMismatch("mixed Dynkin types in a concave tuple")
        object.__setattr__(self, "entries", entries)

    @property
    def dynkin(self) -> DynkinType:
        return self.entries[0].dynkin

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i: int) -> ConcaveMap:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)


def find_violation(f: ConcaveMap) -> tuple[Root, ...] | None:
    """First failure of the pairwise concavity test, or ``None``.

    Checked in order: ``f(0) >= 0`` (reported as ``(0,)``), then
    ``f(r) + f(-r) >= f(0)`` reported as ``(r, -r)``, then
    ``f(r+s) <= f(r) + f(s)`` reported as ``(r, s)``.
    """
    return _violation(f.dynkin, f.values, f.zero)


def _violation(dynkin, values: Sequence, zero) -> tuple[Root, ...] | None:
    rs = build_root_system(dynkin)
    if zero < 0:
        return (rs.zero,)
    half = len(rs.positives)
    for i, r in enumerate(rs.positives):
        if values[i] + values[i + half] < zero:
            return (r, rs.negatives[i])
    idx = rs._index
    for r, s, t in rs.sum_pairs():
        if values[idx[t]] > values[idx[r]] + values[idx[s]]:
            return (r, s)
    return None


def is_concave(f: ConcaveMap) -> bool:
    return find_violation(f) is None


def concave_values(dynkin, values: Sequence, zero) -> bool:
    """Pairwise concavity on raw value sequences aligned with ``roots``;
    used by bulk enumeration where building ConcaveMap objects is wasteful."""
    return _violation(DynkinType.parse(dynkin), values, zero) is None


def require_concave(f: ConcaveMap):
    bad = find_violation(f)
    if bad is not None:
        raise NotConcave(f"concavity fails at {[list(r) for r in bad]}")


def from_point(theta: ApartmentPoint) -> ConcaveMap:
    """``r -> m_r(theta)`` with value 0 at 0."""
    rs = build_root_system(theta.dynkin)
    return ConcaveMap(rs.dynkin, tuple(m_point(r, theta) for r in rs.roots), 0)


def from_set(omega: BoundedSet) -> ConcaveMap:
    """``r -> m_r(omega)`` with value 0 at 0."""
    rs = build_root_system(omega.dynkin)
    return ConcaveMap(rs.dynkin, tuple(m_set(r, omega) for r in rs.roots), 0)


def combine(fs: ConcaveTuple | Sequence[ConcaveMap], subset: Iterable[int] | None = None) -> ConcaveMap:
    """Pointwise sum of the entries indexed by ``subset`` (1-based, default
    all), including the slot at 0."""
    fs = fs if isinstance(fs, ConcaveTuple) else ConcaveTuple(tuple(fs))
    idx = sorted(set(range(1, len(fs) + 1) if subset is None else subset))
    if not idx:
        raise EmptySubset("combine over an empty index set")
    for i in idx:
        if not 1 <= i <= len(fs):
            raise IndexOutOfRange(f"index {i} outside 1..{len(fs)}")
    total = fs[idx[0] - 1]
    for i in idx[1:]:
        total = total + fs[i - 1]
    return total


def pointwise_sup(fs: ConcaveTuple | Sequence[ConcaveMap]) -> ConcaveMap:
    """``r -> max_i f_i(r)``, including the slot at 0."""
    fs = fs if isinstance(fs, ConcaveTuple) else ConcaveTuple(tuple(fs))
    return ConcaveMap(fs.dynkin, tuple(max(vals) for vals in zip(*(f.values for f in fs))),
                      max(f.zero for f in fs))


def ceiling(f: ConcaveMap) -> ConcaveMap:
    require_concave(f)
    return ConcaveMap(f.dynkin, tuple(math.ceil(v) for v in f.values), math.ceil(f.zero))


@dataclass(frozen=True)
class MoyPrasadDatum:
    theta: ApartmentPoint
    depth: Fraction
    root_values: ConcaveMap
    torus_level: int


def moy_prasad(theta: ApartmentPoint, depth) -> MoyPrasadDatum:
    """Root levels ``-floor(r(theta) - depth)`` and torus level ``ceil(depth)``."""
    depth = to_fraction(depth)
    if depth < 0:
        raise NegativeDepth(f"depth {depth} < 0")
    rs = build_root_system(theta.dynkin)
    vals = tuple(-math.floor(pairing(r, theta) - depth) for r in rs.roots)
    return MoyPrasadDatum(theta, depth, ConcaveMap(rs.dynkin, vals, 0), math.ceil(depth))
