"""Root data for the simple Dynkin types, generated from Cartan matrices.

Roots are integer coefficient tuples in the basis of simple roots, with
Bourbaki numbering.  The Cartan matrix convention is fixed once and for all:
``cartan[i][j] = <alpha_j, alpha_i^vee>``, so row ``i`` expresses the simple
coroot ``alpha_i^vee`` in the fundamental-coweight basis and the pairing of a
root with a coweight-coordinate vector is a plain dot product.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, InvalidRank, ParseError, RankMismatch

Root = tuple[int, ...]

MAX_CLASSICAL_RANK = 16

_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_MIN_CLASSICAL_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam in _EXCEPTIONAL_RANKS:
            if self.rank not in _EXCEPTIONAL_RANKS[fam]:
                raise InvalidRank(f"{fam}{self.rank} is not a Dynkin type")
        elif fam in _MIN_CLASSICAL_RANK:
            if not _MIN_CLASSICAL_RANK[fam] <= self.rank <= MAX_CLASSICAL_RANK:
                raise InvalidRank(
                    f"{fam}{self.rank}: rank must lie in "
                    f"[{_MIN_CLASSICAL_RANK[fam]}, {MAX_CLASSICAL_RANK}]")
        else:
            raise InvalidRank(f"unknown family {self.family!r}")

    @classmethod
    def parse(cls, text: str | "DynkinType") -> "DynkinType":
        """Parse strings such as ``"A2"``, ``"g2"`` or ``"E8"``."""
        if isinstance(text, DynkinType):
            return text
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise ParseError(f"cannot parse Dynkin type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(dynkin: DynkinType) -> tuple[tuple[int, ...], ...]:
    fam, n = dynkin.family, dynkin.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        c[i][j] = a_ij
        c[j][i] = a_ji

    if fam in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B":
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            c[n - 1][n - 2] = -2
        elif fam == "C":
            c[n - 2][n - 1] = -2
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2)
        link(2, 3)
        c[2][1] = -2  # alpha_3 short
    elif fam == "G":
        link(0, 1)
        c[0][1] = -3  # alpha_1 short
    return tuple(tuple(row) for row in c)


def _height_key(root: Root):
    # equal height: larger leading coefficients first, so alpha_1 precedes alpha_2
    return (sum(abs(x) for x in root), tuple(-abs(x) for x in root))


def _positive_roots(cartan) -> list[Root]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p = length of the alpha_i string below beta
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in found:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=_height_key)


@dataclass(frozen=True)
class RootSystem:
    dynkin: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    positives: tuple[Root, ...]
    negatives: tuple[Root, ...]
    highest: Root
    _index: dict = field(repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return self.dynkin.rank

    @property
    def roots(self) -> tuple[Root, ...]:
        """Positive roots in canonical order followed by their negatives."""
        return self.positives + self.negatives

    @property
    def zero(self) -> Root:
        return (0,) * self.rank

    @property
    def coroot_in_coweight(self):
        return self.cartan

    def simple_root(self, i: int) -> Root:
        """Simple root ``alpha_i`` with 1-based Bourbaki index."""
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"simple root index {i} outside 1..{self.rank}")
        return tuple(int(j == i - 1) for j in range(self.rank))

    def index(self, root: Sequence[int]) -> int:
        """Position of ``root`` in :attr:`roots`."""
        try:
            return self._index[tuple(root)]
        except KeyError:
            raise ValueError(f"{list(root)} is not a root of {self.dynkin}") from None

    def is_root(self, vec: Sequence[int]) -> bool:
        return tuple(vec) in self._index

    def contains(self, vec: Sequence[int]) -> bool:
        """Membership in Phi union {0}."""
        vec = tuple(vec)
        return vec in self._index or not any(vec)

    def add(self, r: Root, s: Root) -> Root:
        return tuple(a + b for a, b in zip(r, s))

    def is_positive(self, r: Root) -> bool:
        return any(x > 0 for x in r)

    def sum_pairs(self) -> tuple[tuple[Root, Root, Root], ...]:
        """Unordered pairs ``(r, s, r+s)`` of roots whose sum is a root."""
        return _sum_pairs(self.dynkin)

    def closure(self, generators: Iterable[Root]) -> tuple[Root, ...]:
        """Smallest subset of Phi containing ``generators`` closed under
        addition inside Phi.  Returned in canonical order."""
        current = {tuple(g) for g in generators}
        for g in current:
            self.index(g)
        changed = True
        while changed:
            changed = False
            for r in list(current):
                for s in list(current):
                    t = self.add(r, s)
                    if t in self._index and t not in current:
                        current.add(t)
                        changed = True
        return tuple(r for r in self.roots if r in current)


@lru_cache(maxsize=None)
def _sum_pairs(dynkin: DynkinType):
    rs = build_root_system(dynkin)
    out = []
    roots = rs.roots
    for a, r in enumerate(roots):
        for s in roots[a + 1:]:
            t = rs.add(r, s)
            if rs.is_root(t):
                out.append((r, s, t))
    return tuple(out)


@lru_cache(maxsize=None)
def build_root_system(dynkin: DynkinType | str) -> RootSystem:
    dynkin = DynkinType.parse(dynkin)
    cartan = cartan_matrix(dynkin)
    pos = tuple(_positive_roots(cartan))
    neg = tuple(tuple(-x for x in r) for r in pos)
    index = {r: i for i, r in enumerate(pos + neg)}
    highest = max(pos, key=_height_key)
    return RootSystem(dynkin, cartan, pos, neg, highest, index)


def pairing(r: Sequence[int], theta) -> Fraction:
    """``r(theta)``: dot product of simple-root coefficients with coweight
    coordinates.  ``theta`` may be an ApartmentPoint or a coordinate sequence."""
    coords = getattr(theta, "coords", theta)
    if len(coords) != len(r):
        raise RankMismatch(f"root of rank {len(r)} paired with point of rank {len(coords)}")
    return sum((Fraction(a) * b for a, b in zip(r, coords)), Fraction(0))


def coxeter_number(dynkin: DynkinType | str) -> int:
    return 1 + sum(build_root_system(dynkin).highest)


_MIN_FAITHFUL = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n + 1,
    "C": lambda n: 2 * n,
    "D": lambda n: 2 * n,
    "E": lambda n: {6: 27, 7: 56, 8: 248}[n],
    "F": lambda n: 26,
    "G": lambda n: 7,
}


@dataclass(frozen=True)
class GroupConstants:
    coxeter: int
    mixed_char_bound: int
    # True: residue characteristic must satisfy p > bound; False: p >= bound
    strict: bool
    min_faithful_dim: int

    def admits(self, p: int) -> bool:
        """Whether residue characteristic ``p`` meets the tameness bound."""
        return p > self.mixed_char_bound if self.strict else p >= self.mixed_char_bound


def group_constants(dynkin: DynkinType | str) -> GroupConstants:
    dynkin = DynkinType.parse(dynkin)
    fam, n = dynkin.family, dynkin.rank
    h = coxeter_number(dynkin)
    if fam == "A" or (fam, n) in {("G", 2), ("F", 4), ("E", 8)}:
        bound, strict = h, False
    elif fam == "E":
        bound, strict = {6: 27, 7: 56}[n], True
    else:
        bound, strict = 2 * n + 1, True
    return GroupConstants(h, bound, strict, _MIN_FAITHFUL[fam](n))


def root_key(r: Sequence[int]) -> str:
    """JSON key for a root: ``"[3,2]"``."""
    return "[" + ",".join(str(int(x)) for x in r) + "]"


def parse_root(text: str | Sequence[int]) -> Root:
    if not isinstance(text, str):
        return tuple(int(x) for x in text)
    m = re.fullmatch(r"\s*\[?\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]?\s*", text)
    if not m:
        raise ParseError(f"cannot parse root {text!r}")
    return tuple(int(x) for x in m.group(1).split(","))
