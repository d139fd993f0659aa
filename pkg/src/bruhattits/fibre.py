"""Closed-fibre root data, facet corollaries and A_d McKay data."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .apartment import ApartmentPoint, alcove_reduce, alcove_vertices
from .concave.maps import ConcaveMap, ConcaveTuple, ceiling, combine, from_point
from .errors import BadTypeVector, EmptySubset, IndexOutOfRange
from .rootsystem import DynkinType, Root, build_root_system, pairing, root_key


@dataclass(frozen=True)
class FibreRootDatum:
    dynkin: DynkinType
    roots: tuple[Root, ...]

    def __post_init__(self):
        rs = build_root_system(self.dynkin)
        wanted = {tuple(r) for r in self.roots}
        object.__setattr__(self, "roots", tuple(r for r in rs.roots if r in wanted))

    def __contains__(self, r) -> bool:
        return tuple(r) in self.roots

    def __len__(self):
        return len(self.roots)

    def __le__(self, other: "FibreRootDatum") -> bool:
        return set(self.roots) <= set(other.roots)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.roots]

    def render(self) -> str:
        """Each positive root followed by its negative, e.g. ``[1,0] [-1,0]``."""
        rs = build_root_system(self.dynkin)
        present = set(self.roots)
        out = []
        for p, n in zip(rs.positives, rs.negatives):
            out.extend(root_key(r) for r in (p, n) if r in present)
        return " ".join(out)

    def is_closed(self) -> bool:
        rs = build_root_system(self.dynkin)
        present = set(self.roots)
        if any(tuple(-x for x in r) not in present for r in present):
            return False
        return all(rs.add(r, s) in present
                   for r in present for s in present if rs.is_root(rs.add(r, s)))


def fibre_roots(f: ConcaveMap) -> FibreRootDatum:
    """Roots ``r`` with ``ceil(f)(-r) = -ceil(f)(r)``."""
    g = ceiling(f)
    rs = build_root_system(f.dynkin)
    half = len(rs.positives)
    vals = g.values
    keep = [i for i in range(half) if vals[i + half] == -vals[i]]
    return FibreRootDatum(rs.dynkin, tuple(rs.positives[i] for i in keep)
                          + tuple(rs.negatives[i] for i in keep))


def phi_theta(theta: ApartmentPoint) -> FibreRootDatum:
    rs = build_root_system(theta.dynkin)
    return FibreRootDatum(rs.dynkin, tuple(r for r in rs.roots
                                           if pairing(r, theta).denominator == 1))


SCALINGS = ("vertex", "shrunk", "lattice")


def facet_points(dynkin, scaling: str, subset: Iterable[int]) -> list[ApartmentPoint]:
    """The scaled alcove vertices ``theta_a`` for ``a`` in ``subset`` (1-based)."""
    rs = build_root_system(dynkin)
    idx = sorted(set(subset))
    if not idx:
        raise EmptySubset("facet over an empty set of simple roots")
    for i in idx:
        if not 1 <= i <= rs.rank:
            raise IndexOutOfRange(f"simple root index {i} outside 1..{rs.rank}")
    if scaling == "vertex":
        k = Fraction(1)
    elif scaling == "shrunk":
        k = Fraction(1, rs.rank + 1)
    elif scaling == "lattice":
        k = Fraction(math.lcm(*rs.highest))
    else:
        raise ValueError(f"scaling must be one of {SCALINGS}, got {scaling!r}")
    verts = alcove_vertices(rs.dynkin)
    return [verts[i - 1].scale(k) for i in idx]


def facet_fibre(dynkin, scaling: str, subset: Iterable[int]) -> FibreRootDatum:
    points = facet_points(dynkin, scaling, subset)
    return fibre_roots(combine([from_point(p) for p in points]))


def subdiagonal_fibre(fs: ConcaveTuple | Sequence[ConcaveMap], subset: Iterable[int]) -> FibreRootDatum:
    return fibre_roots(combine(fs, list(subset)))


def generated_subsystem(dynkin, generators: Iterable[Root]) -> FibreRootDatum:
    """Additive closure inside Phi of ``generators`` and their negatives."""
    rs = build_root_system(dynkin)
    gens = set()
    for g in generators:
        gens.add(tuple(g))
        gens.add(tuple(-x for x in g))
    return FibreRootDatum(rs.dynkin, rs.closure(gens) if gens else ())


# McKay data -------------------------------------------------------------------

@dataclass(frozen=True)
class McKayComponent:
    s: int
    tau: tuple[int, ...]
    theta: ApartmentPoint


@dataclass(frozen=True)
class McKayData:
    d: int
    tau: tuple[int, ...]
    dynkin: DynkinType
    components: tuple[McKayComponent, ...]
    end_types: tuple[tuple[int, ...], tuple[int, ...]]
    node_functions: tuple[ConcaveMap, ...]
    node_fibres: tuple[FibreRootDatum, ...]
    # each theta_s is the closed-alcove representative of its class
    alcove_reduced: bool = True

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "type": str(self.dynkin),
            "tau": list(self.tau),
            "alcove_reduced": self.alcove_reduced,
            "end_types": [list(self.end_types[0]), list(self.end_types[1])],
            "components": [{"s": c.s, "tau": list(c.tau), "theta": c.theta.to_json()}
                           for c in self.components],
            "nodes": [{"s": s + 1, "function": f.to_json(), "fibre": fib.to_json()}
                      for s, (f, fib) in enumerate(zip(self.node_functions, self.node_fibres))],
        }


def mckay_ad(d: int, tau: Sequence[int], dynkin) -> McKayData:
    rs = build_root_system(dynkin)
    if d < 2:
        raise BadTypeVector(f"d must be at least 2, got {d}")
    tau = tuple(int(a) for a in tau)
    if len(tau) != rs.rank:
        raise BadTypeVector(f"type vector of length {len(tau)} for rank {rs.rank}")
    if any(not 0 <= a < d for a in tau):
        raise BadTypeVector(f"type vector entries must be reduced mod {d}")
    comps = []
    for s in range(1, d):
        tau_s = tuple(s * a % d for a in tau)
        raw = ApartmentPoint(rs.dynkin, tuple(Fraction(a, d) for a in tau_s))
        comps.append(McKayComponent(s, tau_s, alcove_reduce(raw)))
    funcs = tuple(from_point(comps[s].theta) + from_point(comps[s + 1].theta)
                  for s in range(d - 2))
    bar = tuple(-a % d for a in tau)
    return McKayData(d, tau, rs.dynkin, tuple(comps), (tau, bar), funcs,
                     tuple(fibre_roots(f) for f in funcs))
