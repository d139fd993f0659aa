"""Type I/II/III classification and the f' regularization.

For an integral concave ``f`` the point ``theta`` realizes ``f`` at the root
``r`` exactly when ``-f(r) <= r(theta) < 1 - f(r)``.  Type I asks for one
point doing this for every root at once.  Type II asks, root by root, for a
point realizing ``f(r)`` while staying inside ``E_f = {theta : s(theta) >=
-f(s) for all s}``; the union of those points is then a finite set on which
every ``m_s`` attains ``f(s)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .._exact import fmt
from ..apartment import ApartmentPoint, BoundedSet
from ..errors import NotIntegral, UnboundedRegularization
from ..rootsystem import Root, build_root_system, pairing, root_key
from .feasibility import Constraint, feasible_point, leq, lt
from .lp import Unbounded, minimize
from .maps import ConcaveMap, require_concave


@dataclass(frozen=True)
class TypeI:
    theta: ApartmentPoint

    def describe(self) -> str:
        return f"TypeI theta={self.theta}"


@dataclass(frozen=True)
class TypeII:
    omega: BoundedSet

    def describe(self) -> str:
        return "TypeII omega=" + " ".join(str(p) for p in self.omega)


@dataclass(frozen=True)
class TypeIII:
    certificate: Root

    def describe(self) -> str:
        return f"TypeIII certificate={root_key(self.certificate)}"


TypeWitness = TypeI | TypeII | TypeIII


def _lower(r: Root, value) -> Constraint:
    # r(theta) >= -value
    return leq([-x for x in r], value)


def _strict_upper(r: Root, value) -> Constraint:
    # r(theta) < 1 - value
    return lt(r, 1 - value)


def type_one_system(f: ConcaveMap) -> list[Constraint]:
    out = []
    for r, v in f.items():
        out.append(_lower(r, v))
        out.append(_strict_upper(r, v))
    return out


def type_two_system(f: ConcaveMap, r: Root) -> list[Constraint]:
    """Realize ``f(r)`` at ``r`` inside ``E_f``."""
    out = [_lower(s, v) for s, v in f.items()]
    out.append(_strict_upper(r, f[r]))
    return out


def _require_integral_concave(f: ConcaveMap):
    if f.zero.denominator != 1:
        raise NotIntegral(f"value {fmt(f.zero)} at 0 is not an integer")
    for r, v in f.items():
        if v.denominator != 1:
            raise NotIntegral(f"value {fmt(v)} at {root_key(r)} is not an integer")
    require_concave(f)


def classify(f: ConcaveMap) -> TypeWitness:
    _require_integral_concave(f)
    rs = build_root_system(f.dynkin)
    n = rs.rank
    point = feasible_point(type_one_system(f), n)
    if point is not None:
        return TypeI(ApartmentPoint(rs.dynkin, point))
    points = []
    for r in rs.roots:
        # earlier points already lie in E_f, so only the strict bound at r is new
        if any(pairing(r, p) < 1 - f[r] for p in points):
            continue
        point = feasible_point(type_two_system(f, r), n)
        if point is None:
            return TypeIII(r)
        points.append(ApartmentPoint(rs.dynkin, point))
    return TypeII(BoundedSet(tuple(points)))


def describe(witness: TypeWitness) -> str:
    return witness.describe()


def witness_json(witness: TypeWitness) -> dict:
    if isinstance(witness, TypeI):
        return {"type": "I", "theta": witness.theta.to_json()}
    if isinstance(witness, TypeII):
        return {"type": "II", "omega": witness.omega.to_json()}
    return {"type": "III", "certificate": list(witness.certificate)}


def regularize(f: ConcaveMap) -> ConcaveMap:
    """``f'(a) = ceil(min sum lambda_b f(b))`` over ``lambda >= 0`` with
    ``sum lambda_b b = a``; the value at 0 is kept."""
    require_concave(f)
    rs = build_root_system(f.dynkin)
    cost = list(f.values)
    A = [[r[i] for r in rs.roots] for i in range(rs.rank)]
    out = []
    for alpha in rs.roots:
        try:
            res = minimize(cost, A, alpha)
        except Unbounded:
            raise UnboundedRegularization(
                f"no finite minimum at {root_key(alpha)}") from None
        out.append(math.ceil(res.value))
    return ConcaveMap(rs.dynkin, tuple(out), f.zero)

