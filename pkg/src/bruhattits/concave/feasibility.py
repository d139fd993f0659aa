"""Exact feasibility of linear inequality systems with strict bounds.

Strict inequalities ``a.x < c`` are encoded as ``a.x <= c - eps`` where
``eps`` is a positive infinitesimal; bounds then live in the ordered
Q-vector space Q + Q*eps with lexicographic order.  Fourier-Motzkin
elimination only needs rational scaling and addition, so it runs unchanged
over that space.  A feasible system yields a witness with coordinates in
Q + Q*eps, which is then specialized at a concrete small rational eps and
verified exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Sequence


@total_ordering
@dataclass(frozen=True)
class Eps:
    """``a + b*eps`` with ``eps`` a positive infinitesimal."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __add__(self, other: "Eps") -> "Eps":
        return Eps(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Eps") -> "Eps":
        return Eps(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Eps":
        return Eps(-self.a, -self.b)

    def scale(self, k: Fraction) -> "Eps":
        return Eps(k * self.a, k * self.b)

    def __lt__(self, other: "Eps") -> bool:
        return (self.a, self.b) < (other.a, other.b)

    def at(self, eps: Fraction) -> Fraction:
        return self.a + self.b * eps


ZERO = Eps()


@dataclass(frozen=True)
class Constraint:
    """``coeffs . x <= bound``."""

    coeffs: tuple[Fraction, ...]
    bound: Eps


def leq(coeffs: Sequence, c) -> Constraint:
    return Constraint(tuple(Fraction(x) for x in coeffs), Eps(Fraction(c)))


def lt(coeffs: Sequence, c) -> Constraint:
    return Constraint(tuple(Fraction(x) for x in coeffs), Eps(Fraction(c), Fraction(-1)))


# Elimination runs on integer rows ``(coeffs, a, b, d)`` meaning
# ``coeffs . x <= (a + b*eps) / d`` with primitive ``coeffs`` and ``d > 0``.

def _row(c: Constraint) -> tuple:
    parts = list(c.coeffs) + [c.bound.a, c.bound.b]
    den = math.lcm(*(x.denominator for x in parts))
    ints = [x.numerator * (den // x.denominator) for x in parts]
    return _reduce(tuple(ints[:-2]), ints[-2], ints[-1], 1)


def _reduce(coeffs: tuple, a: int, b: int, d: int) -> tuple:
    g = math.gcd(*coeffs)
    if g > 1:
        coeffs = tuple(x // g for x in coeffs)
        d *= g
    h = math.gcd(a, b, d)
    if h > 1:
        a, b, d = a // h, b // h, d // h
    return coeffs, a, b, d


def _normalize(rows: list[tuple]) -> tuple[list[tuple], bool]:
    """Keep the tightest bound per direction.  Returns ``(rows, consistent)``,
    where the second item is False once a constant row ``0 <= bound`` fails."""
    best: dict[tuple, tuple] = {}
    for row in rows:
        coeffs, a, b, d = row
        if not any(coeffs):
            if (a, b) < (0, 0):
                return [], False
            continue
        old = best.get(coeffs)
        if old is None or (a * old[3], b * old[3]) < (old[1] * d, old[2] * d):
            best[coeffs] = row
    return list(best.values()), True


def _eliminate(rows: list[tuple], var: int) -> list[tuple]:
    upper, lower, rest = [], [], []
    for row in rows:
        a = row[0][var]
        (upper if a > 0 else lower if a < 0 else rest).append(row)
    out = list(rest)
    for cu, au, bu, du in upper:
        p = cu[var]
        for cl, al, bl, dl in lower:
            q = -cl[var]
            coeffs = tuple(q * x + p * y for x, y in zip(cu, cl))
            out.append(_reduce(coeffs, q * au * dl + p * al * du,
                               q * bu * dl + p * bl * du, du * dl))
    return out


def _bounds(rows: list[tuple], var: int, assigned: list[Eps]):
    lo = hi = None
    for coeffs, a, b, d in rows:
        k = coeffs[var]
        if k == 0:
            continue
        rhs = Eps(Fraction(a, d), Fraction(b, d))
        for j, x in enumerate(assigned):
            if coeffs[j]:
                rhs = rhs - x.scale(coeffs[j])
        val = rhs.scale(Fraction(1, k))
        if k > 0:
            hi = val if hi is None or val < hi else hi
        else:
            lo = val if lo is None or val > lo else lo
    return lo, hi


def solve_eps(cons: Sequence[Constraint], nvars: int) -> list[Eps] | None:
    """A point of ``{x : all constraints}`` over Q + Q*eps, or ``None``."""
    stages = []
    current, ok = _normalize([_row(c) for c in cons])
    if not ok:
        return None
    for var in reversed(range(nvars)):
        stages.append(current)
        current, ok = _normalize(_eliminate(current, var))
        if not ok:
            return None
    stages.reverse()
    point: list[Eps] = []
    for var in range(nvars):
        lo, hi = _bounds(stages[var], var, point)
        if lo is not None and hi is not None:
            if hi < lo:
                return None  # unreachable when elimination is exact
            point.append((lo + hi).scale(Fraction(1, 2)))
        elif lo is not None:
            point.append(lo)
        elif hi is not None:
            point.append(hi)
        else:
            point.append(ZERO)
    return point


def specialize(cons: Sequence[Constraint], point: Sequence[Eps]) -> list[Fraction]:
    """Pick a rational ``eps > 0`` small enough that ``point`` satisfies every
    constraint as real numbers, and evaluate."""
    # point_i = (xa_i + xb_i*eps) / den with integer xa, xb
    den = math.lcm(*(v.denominator for p in point for v in (p.a, p.b)))
    xa = [p.a.numerator * (den // p.a.denominator) for p in point]
    xb = [p.b.numerator * (den // p.b.denominator) for p in point]
    rows = [_row(c) for c in cons]
    limit = Fraction(1)
    for coeffs, a, b, d in rows:
        # slack times d*den, split into real and eps parts
        sa = a * den - d * sum(k * v for k, v in zip(coeffs, xa))
        sb = b * den - d * sum(k * v for k, v in zip(coeffs, xb))
        if sb < 0:
            limit = min(limit, Fraction(sa, -sb))
    eps = limit / 2
    p, q = eps.numerator, eps.denominator
    num = [u * q + w * p for u, w in zip(xa, xb)]
    for coeffs, a, b, d in rows:
        value = d * sum(k * v for k, v in zip(coeffs, num))
        if value > (a * q + b * p) * den or (b < 0 and value >= a * q * den):
            raise AssertionError("witness specialization failed")  # pragma: no cover
    return [Fraction(v, den * q) for v in num]


def feasible_point(cons: Sequence[Constraint], nvars: int) -> list[Fraction] | None:
    point = solve_eps(cons, nvars)
    if point is None:
        return None
    return specialize(cons, point)
