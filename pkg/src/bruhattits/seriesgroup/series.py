"""Truncated multivariate Laurent series with exact coefficients.

A series lives in a :class:`SeriesRing` fixed by the number of variables,
the per-variable degree cap ``D`` and the pole cap ``P``.  Terms whose
exponent exceeds ``D`` in some variable are dropped; a term with an exponent
below ``-P`` raises :class:`PoleOverflow` (and takes precedence over
dropping, so a pole is never lost silently).

Exponent vectors are packed into one integer, digit ``k`` holding
``e_k + P`` in base ``2(D+P)+1``.  Adding two packed keys adds the exponent
vectors without carries, and a per-ring table maps every such sum to the
packed product exponent or to a drop/overflow marker.  Coefficients are
Python ints or Fractions, or residues when the ring has a prime modulus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .._exact import fmt, to_fraction
from ..errors import ParseError, PoleOverflow, SizeMismatch

_DROP = -1
_OVERFLOW = -2


@dataclass(frozen=True)
class SeriesRing:
    nvars: int
    cap: int
    pole_cap: int = 0
    modulus: int | None = None
    _base: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.nvars < 1:
            raise SizeMismatch("a series ring needs at least one variable")
        if self.cap < 1 or self.pole_cap < 0:
            raise SizeMismatch("need cap >= 1 and pole_cap >= 0")
        if self.modulus is not None and self.modulus < 2:
            raise SizeMismatch("modulus must be at least 2")
        object.__setattr__(self, "_base", 2 * (self.cap + self.pole_cap) + 1)

    # packing ----------------------------------------------------------
    def pack(self, exps: Iterable[int]) -> int:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise SizeMismatch(f"exponent of length {len(exps)} in {self.nvars} variables")
        if min(exps) < -self.pole_cap:
            raise PoleOverflow(f"exponent {min(exps)} below pole cap -{self.pole_cap}")
        if max(exps) > self.cap:
            return _DROP
        key = 0
        for e in reversed(exps):
            key = key * self._base + e + self.pole_cap
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.nvars):
            key, digit = divmod(key, self._base)
            out.append(digit - self.pole_cap)
        return tuple(out)

    @property
    def offset(self) -> int:
        """Packed key of the zero exponent vector."""
        return _offset(self.nvars, self._base, self.pole_cap)

    @property
    def product_table(self) -> list[int]:
        return _product_table(self.nvars, self.cap, self.pole_cap)

    def reduce(self, c):
        if self.modulus is None:
            if isinstance(c, Fraction) and c.denominator == 1:
                return c.numerator
            return c
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.modulus) % self.modulus
        return c % self.modulus

    def invert_scalar(self, c):
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.modulus is not None:
            return pow(c, -1, self.modulus)
        if c in (1, -1):
            return int(c)
        return Fraction(1) / c

    # constructors -----------------------------------------------------
    def zero(self) -> "TruncatedSeries":
        return TruncatedSeries(self, {})

    def one(self) -> "TruncatedSeries":
        return self.constant(1)

    def constant(self, c) -> "TruncatedSeries":
        return self.monomial((0,) * self.nvars, c)

    def monomial(self, exps: Iterable[int], c=1) -> "TruncatedSeries":
        key = self.pack(exps)
        c = self.reduce(c)
        if key == _DROP or c == 0:
            return self.zero()
        return TruncatedSeries(self, {key: c})

    def from_terms(self, terms: Mapping[tuple[int, ...], object]) -> "TruncatedSeries":
        out: dict[int, object] = {}
        for exps, c in terms.items():
            key = self.pack(exps)
            if key == _DROP:
                continue
            out[key] = out.get(key, 0) + c
        return TruncatedSeries(self, {k: r for k, v in out.items()
                                      if (r := self.reduce(v)) != 0})


@lru_cache(maxsize=None)
def _offset(nvars: int, base: int, pole_cap: int) -> int:
    return sum(pole_cap * base ** k for k in range(nvars))


@lru_cache(maxsize=None)
def _product_table(nvars: int, cap: int, pole_cap: int) -> list[int]:
    """Entry ``s`` for the sum ``s`` of two packed keys."""
    base = 2 * (cap + pole_cap) + 1
    table = [_DROP] * base ** nvars
    for digits in itertools.product(range(base), repeat=nvars):
        exps = [d - 2 * pole_cap for d in digits]
        s = sum(d * base ** k for k, d in enumerate(digits))
        if any(e < -pole_cap for e in exps):
            table[s] = _OVERFLOW
        elif any(e > cap for e in exps):
            table[s] = _DROP
        else:
            table[s] = sum((e + pole_cap) * base ** k for k, e in enumerate(exps))
    return table


class TruncatedSeries:
    """Immutable sparse series; build through a :class:`SeriesRing`."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: SeriesRing, terms: dict[int, object]):
        self.ring = ring
        self._terms = terms

    # inspection ---------------------------------------------------------
    @property
    def nvars(self) -> int:
        return self.ring.nvars

    @property
    def cap(self) -> int:
        return self.ring.cap

    @property
    def pole_cap(self) -> int:
        return self.ring.pole_cap

    @property
    def terms(self) -> dict[tuple[int, ...], object]:
        return {self.ring.unpack(k): c for k, c in self._terms.items()}

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def constant_term(self):
        return self._terms.get(self.ring.offset, 0)

    def coefficient(self, exps) -> object:
        key = self.ring.pack(exps)
        return self._terms.get(key, 0) if key != _DROP else 0

    def exponents(self) -> list[tuple[int, ...]]:
        return sorted(self.iter_exponents())

    def iter_exponents(self) -> Iterator[tuple[int, ...]]:
        unpack = self.ring.unpack
        return (unpack(k) for k in self._terms)

    def min_total_degree(self) -> int | None:
        if not self._terms:
            return None
        return min(sum(e) for e in self.exponents())

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def __repr__(self):
        return f"TruncatedSeries({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps in self.exponents():
            c = self.coefficient(exps)
            mono = "*".join(f"z{k + 1}^{e}" if e != 1 else f"z{k + 1}"
                            for k, e in enumerate(exps) if e)
            parts.append(f"{fmt(c)}*{mono}" if mono else fmt(c))
        return " + ".join(parts)

    # arithmetic -----------------------------------------------------------
    def _same(self, other: "TruncatedSeries"):
        if other.ring != self.ring:
            raise SizeMismatch(f"series rings differ: {self.ring} vs {other.ring}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same(other)
        out = dict(self._terms)
        reduce = self.ring.reduce
        for k, c in other._terms.items():
            v = reduce(out.get(k, 0) + c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TruncatedSeries(self.ring, out)

    def __neg__(self) -> "TruncatedSeries":
        reduce = self.ring.reduce
        return TruncatedSeries(self.ring, {k: reduce(-c) for k, c in self._terms.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c) -> "TruncatedSeries":
        c = self.ring.reduce(c)
        if c == 0:
            return self.ring.zero()
        reduce = self.ring.reduce
        return TruncatedSeries(self.ring, {k: reduce(c * v) for k, v in self._terms.items()})

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._same(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return self.ring.zero()
        table = self.ring.product_table
        out: dict[int, object] = {}
        get = out.get
        for ka, ca in a.items():
            for kb, cb in b.items():
                t = table[ka + kb]
                if t >= 0:
                    out[t] = get(t, 0) + ca * cb
                elif t == _OVERFLOW:
                    raise PoleOverflow(
                        f"product term below pole cap -{self.ring.pole_cap}")
        ring = self.ring
        if ring.modulus is None:
            return TruncatedSeries(ring, {k: v for k, v in out.items() if v})
        return TruncatedSeries(ring, {k: r for k, v in out.items() if (r := v % ring.modulus)})

    __rmul__ = scale

    def inverse(self) -> "TruncatedSeries":
        """Inverse of a unit ``c(1 + x)`` where ``x`` has only terms of
        positive total degree and no poles; the geometric series terminates
        because every monomial of total degree above ``nvars * cap`` drops."""
        c0 = self.constant_term()
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not a unit")
        if any(e < 0 for exps in self.exponents() for e in exps):
            raise ZeroDivisionError("inverse of a series with poles is not supported")
        inv0 = self.ring.invert_scalar(c0)
        x = self.scale(inv0) - self.ring.one()  # series is c0 * (1 + x)
        total = self.ring.one()
        power = self.ring.one()
        for _ in range(self.nvars * self.cap):
            power = -(power * x)
            if power.is_zero():
                break
            total = total + power
        return total.scale(inv0)

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    # substitution -----------------------------------------------------------
    def substitute(self, ring: SeriesRing, exponent_map) -> "TruncatedSeries":
        """Send monomial ``z^e`` to ``z'^{exponent_map(e)}`` in ``ring``."""
        out: dict[tuple[int, ...], object] = {}
        for exps, c in self.terms.items():
            target = tuple(exponent_map(exps))
            out[target] = out.get(target, 0) + c
        return ring.from_terms(out)

    # JSON -------------------------------------------------------------------
    def to_json(self) -> list[dict]:
        return [{"exp": list(exps), "coef": fmt(self.coefficient(exps))}
                for exps in self.exponents()]

    @classmethod
    def from_json(cls, ring: SeriesRing, data: list) -> "TruncatedSeries":
        try:
            terms: dict[tuple[int, ...], object] = {}
            for item in data:
                exps = tuple(int(e) for e in item["exp"])
                terms[exps] = terms.get(exps, 0) + to_fraction(str(item["coef"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed series JSON: {exc}") from exc
        return ring.from_terms(terms)
