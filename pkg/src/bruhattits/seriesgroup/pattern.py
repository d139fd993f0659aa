"""Valuation patterns for SL_m and the matrix-level operations on them.

Entry ``(i, j)`` of an SL_m matrix (0-based here) carries the root
``eps_i - eps_j``; in the simple-root basis of type ``A_{m-1}`` that is
``alpha_i + ... + alpha_{j-1}`` above the diagonal and its negative below.
A concave tuple ``(f_1, ..., f_n)`` bounds that entry from below by the
exponent vector ``(f_1(r), ..., f_n(r))``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence

from ..concave.maps import ConcaveMap, ConcaveTuple, MoyPrasadDatum, combine, from_point
from ..apartment import ApartmentPoint
from ..errors import NotIntegral, ParseError, SizeMismatch, WrongType
from ..rootsystem import DynkinType, Root
from .matrix import TruncatedLaurentMatrix
from .series import SeriesRing, TruncatedSeries


def entry_root(m: int, i: int, j: int) -> Root:
    """``eps_i - eps_j`` for 0-based ``i != j`` in type ``A_{m-1}``."""
    lo, hi = min(i, j), max(i, j)
    sign = 1 if i < j else -1
    return tuple(sign if lo <= k < hi else 0 for k in range(m - 1))


@dataclass(frozen=True)
class ValuationPattern:
    m: int
    nvars: int
    bounds: tuple[tuple[tuple[int, ...] | None, ...], ...]
    diag_unit_level: int = 0

    def __post_init__(self):
        bounds = tuple(tuple(None if b is None else tuple(int(x) for x in b) for b in row)
                       for row in self.bounds)
        if len(bounds) != self.m or any(len(r) != self.m for r in bounds):
            raise SizeMismatch(f"bounds must be {self.m}x{self.m}")
        for i, row in enumerate(bounds):
            for j, b in enumerate(row):
                if (i == j) != (b is None):
                    raise SizeMismatch("bounds are None exactly on the diagonal")
                if b is not None and len(b) != self.nvars:
                    raise SizeMismatch(f"bound {b} has wrong length for {self.nvars} variables")
        if self.diag_unit_level < 0:
            raise SizeMismatch("diag_unit_level must be nonnegative")
        object.__setattr__(self, "bounds", bounds)

    def bound(self, i: int, j: int) -> tuple[int, ...]:
        """Bound for the 1-based entry ``(i, j)``."""
        return self.bounds[i - 1][j - 1]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "nvars": self.nvars,
            "diag_unit_level": self.diag_unit_level,
            "bounds": [[None if b is None else list(b) for b in row] for row in self.bounds],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "ValuationPattern":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["m"]), int(data["nvars"]), data["bounds"],
                       int(data.get("diag_unit_level", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, SizeMismatch):
                raise
            raise ParseError(f"malformed pattern JSON: {exc}") from exc


def pattern(fs: ConcaveTuple | Sequence[ConcaveMap], diag_unit_level: int = 0) -> ValuationPattern:
    fs = fs if isinstance(fs, ConcaveTuple) else ConcaveTuple(tuple(fs))
    dynkin = fs.dynkin
    if dynkin.family != "A":
        raise WrongType(f"matrix patterns need type A, got {dynkin}")
    for f in fs:
        if not f.is_integral():
            raise NotIntegral("pattern bounds must be integers")
    m = dynkin.rank + 1
    bounds = [[None if i == j else tuple(int(f[entry_root(m, i, j)]) for f in fs)
               for j in range(m)] for i in range(m)]
    return ValuationPattern(m, len(fs), bounds, diag_unit_level)


def moy_prasad_pattern(datum: MoyPrasadDatum) -> ValuationPattern:
    return pattern(ConcaveTuple((datum.root_values,)), diag_unit_level=datum.torus_level)


def is_member(M: TruncatedLaurentMatrix, pat: ValuationPattern) -> bool:
    if M.size != pat.m or M.nvars != pat.nvars:
        raise SizeMismatch(f"{M.size}x{M.size} matrix in {M.nvars} variables "
                           f"against a pattern for SL{pat.m} in {pat.nvars}")
    level = pat.diag_unit_level
    for i in range(pat.m):
        for j in range(pat.m):
            exps = list(M[i, j].iter_exponents())
            if i == j:
                if any(e < 0 for ex in exps for e in ex):
                    return False
                if level > 0:
                    low = {ex: c for ex, c in M[i, j].terms.items() if sum(ex) < level}
                    if low != {(0,) * pat.nvars: 1}:
                        return False
            else:
                v = pat.bounds[i][j]
                if any(any(e < b for e, b in zip(ex, v)) for ex in exps):
                    return False
    return M.det() == M.ring.one()


# sampling -------------------------------------------------------------------

def _random_exponent(rng: random.Random, nvars: int, cap: int, min_total: int) -> tuple[int, ...]:
    while True:
        e = tuple(rng.randint(0, cap) for _ in range(nvars))
        if sum(e) >= max(min_total, 1):
            return e


def _short_series(rng: random.Random, ring: SeriesRing, shift: Sequence[int],
                  terms: int, coef_range: int) -> TruncatedSeries:
    """``z^shift`` times a short random series with nonzero constant term."""
    out = {}
    for t in range(terms):
        if t == 0:
            e = (0,) * ring.nvars
            c = rng.choice([c for c in range(-coef_range, coef_range + 1) if c])
        else:
            e = tuple(rng.randint(0, 2) for _ in range(ring.nvars))
            c = rng.randint(-coef_range, coef_range)
        out[tuple(a + b for a, b in zip(e, shift))] = c
    return ring.from_terms(out)


def sample_member(pat: ValuationPattern, seed: int, *, cap: int = 4, pole_cap: int = 0,
                  generators: int | None = None, max_generators: int = 4,
                  series_terms: int = 2, coef_range: int = 3,
                  modulus: int | None = None) -> TruncatedLaurentMatrix:
    """Seeded product of root elements ``I + a E_ij`` with ``a`` divisible by
    ``z^{v(i,j)}`` and torus elements ``diag(.., u, .., u^{-1}, ..)`` with
    ``u`` a unit (``u = 1 mod degree diag_unit_level`` when that is positive).
    ``generators`` fixes the number of factors; otherwise it is drawn from
    ``0..max_generators``."""
    rng = random.Random(seed)
    ring = SeriesRing(pat.nvars, cap, pole_cap, modulus)
    m = pat.m
    count = rng.randint(0, max_generators) if generators is None else generators
    M = TruncatedLaurentMatrix.identity(ring, m)
    level = pat.diag_unit_level
    for _ in range(count):
        if m > 1 and rng.random() < 0.7:
            i, j = rng.sample(range(m), 2)
            a = _short_series(rng, ring, pat.bounds[i][j], series_terms, coef_range)
            G = TruncatedLaurentMatrix.identity(ring, m).with_entry(i, j, a)
        else:
            if m < 2:
                continue
            i, j = rng.sample(range(m), 2)
            c = rng.choice([c for c in range(-coef_range, coef_range + 1) if c])
            sign = 1 if level > 0 else rng.choice([1, -1])
            e = _random_exponent(rng, ring.nvars, cap, level)
            u = (ring.one() + ring.monomial(e, c)).scale(sign)
            G = TruncatedLaurentMatrix.identity(ring, m).with_entry(i, i, u)
            G = G.with_entry(j, j, u.inverse())
        M = M.multiply(G)
    return M


# specialization ---------------------------------------------------------------

def specialize_diag(M: TruncatedLaurentMatrix) -> TruncatedLaurentMatrix:
    """Substitute ``z_1 = ... = z_n = t``; cap and pole cap carry over."""
    src = M.ring
    ring = SeriesRing(1, src.cap, src.pole_cap, src.modulus)
    return M.map_entries(ring, lambda s: s.substitute(ring, lambda e: (sum(e),)))


def embed_uniformizer(M: TruncatedLaurentMatrix, n: int) -> TruncatedLaurentMatrix:
    """Substitute ``t = z_1 z_2 ... z_n`` into a one-variable matrix."""
    if M.nvars != 1:
        raise SizeMismatch(f"expected a one-variable matrix, got {M.nvars} variables")
    if n < 1:
        raise SizeMismatch("need at least one target variable")
    src = M.ring
    ring = SeriesRing(n, src.cap, src.pole_cap, src.modulus)
    return M.map_entries(ring, lambda s: s.substitute(ring, lambda e: (e[0],) * n))


@dataclass(frozen=True)
class NonCommutingDemo:
    """Two SL2 one-variable patterns from the same pair of points: equating
    variables after imposing regularity (``diagonal``) versus before
    (``merged``, the single point ``theta_1 + theta_2``)."""

    thetas: tuple[ApartmentPoint, ApartmentPoint]
    diagonal: ValuationPattern
    merged: ValuationPattern

    @property
    def commutes(self) -> bool:
        return self.diagonal == self.merged


def noncommuting_demo(theta1, theta2) -> NonCommutingDemo:
    """SL2 points given by their coweight coordinate (``alpha(theta)``)."""
    dynkin = DynkinType("A", 1)
    p1 = ApartmentPoint(dynkin, (theta1,))
    p2 = ApartmentPoint(dynkin, (theta2,))
    diagonal = pattern(ConcaveTuple((combine([from_point(p1), from_point(p2)]),)))
    merged = pattern(ConcaveTuple((from_point(p1 + p2),)))
    return NonCommutingDemo((p1, p2), diagonal, merged)
