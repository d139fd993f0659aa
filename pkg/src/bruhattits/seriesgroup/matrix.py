"""Square matrices over a truncated series ring."""

from __future__ import annotations

import json
from typing import Sequence

from ..errors import ParseError, SizeMismatch
from .series import SeriesRing, TruncatedSeries


class TruncatedLaurentMatrix:
    __slots__ = ("ring", "rows", "_det")

    def __init__(self, ring: SeriesRing, rows: Sequence[Sequence[TruncatedSeries]]):
        rows = tuple(tuple(r) for r in rows)
        m = len(rows)
        if m == 0 or any(len(r) != m for r in rows):
            raise SizeMismatch("matrix must be square and nonempty")
        for r in rows:
            for s in r:
                if s.ring != ring:
                    raise SizeMismatch("entry lives in a different series ring")
        self.ring = ring
        self.rows = rows
        self._det = None

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    @property
    def cap(self) -> int:
        return self.ring.cap

    @property
    def pole_cap(self) -> int:
        return self.ring.pole_cap

    def __getitem__(self, ij: tuple[int, int]) -> TruncatedSeries:
        i, j = ij
        return self.rows[i][j]

    @classmethod
    def identity(cls, ring: SeriesRing, m: int) -> "TruncatedLaurentMatrix":
        one, zero = ring.one(), ring.zero()
        return cls(ring, [[one if i == j else zero for j in range(m)] for i in range(m)])

    @classmethod
    def from_monomials(cls, ring: SeriesRing, layout) -> "TruncatedLaurentMatrix":
        """``layout[i][j]`` is ``None`` (zero), or ``(coef, exps)``."""
        return cls(ring, [[ring.zero() if e is None else ring.monomial(e[1], e[0])
                           for e in row] for row in layout])

    def with_entry(self, i: int, j: int, value: TruncatedSeries) -> "TruncatedLaurentMatrix":
        rows = [list(r) for r in self.rows]
        rows[i][j] = value
        return TruncatedLaurentMatrix(self.ring, rows)

    def __eq__(self, other):
        if not isinstance(other, TruncatedLaurentMatrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "TruncatedLaurentMatrix(" + "; ".join(
            ", ".join(str(s) for s in r) for r in self.rows) + ")"

    def _check(self, other: "TruncatedLaurentMatrix"):
        if other.ring != self.ring or other.size != self.size:
            raise SizeMismatch("matrices differ in size or series ring")

    def multiply(self, other: "TruncatedLaurentMatrix") -> "TruncatedLaurentMatrix":
        self._check(other)
        m = self.size
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new = []
            for col in cols:
                acc = self.ring.zero()
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                new.append(acc)
            out.append(new)
        return TruncatedLaurentMatrix(self.ring, out)

    __matmul__ = multiply

    def _minor(self, i: int, j: int) -> "TruncatedLaurentMatrix":
        return TruncatedLaurentMatrix(
            self.ring, [[s for c, s in enumerate(r) if c != j]
                        for k, r in enumerate(self.rows) if k != i])

    def det(self) -> TruncatedSeries:
        # rows are immutable, so the value is cached
        if self._det is None:
            self._det = self._laplace()
        return self._det

    def _laplace(self) -> TruncatedSeries:
        """Laplace expansion along the first row (sizes here are tiny)."""
        m = self.size
        if m == 1:
            return self.rows[0][0]
        if m == 2:
            (a, b), (c, d) = self.rows
            return a * d - b * c
        acc = self.ring.zero()
        for j, a in enumerate(self.rows[0]):
            if not a:
                continue
            term = a * self._minor(0, j).det()
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    def adjugate(self) -> "TruncatedLaurentMatrix":
        m = self.size
        if m == 1:
            return TruncatedLaurentMatrix.identity(self.ring, 1)
        out = [[None] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                cof = self._minor(i, j).det()
                out[j][i] = cof if (i + j) % 2 == 0 else -cof
        return TruncatedLaurentMatrix(self.ring, out)

    def inverse(self) -> "TruncatedLaurentMatrix":
        """``adj(M) / det(M)``; equal to the adjugate when ``det = 1``."""
        d = self.det()
        adj = self.adjugate()
        if d == self.ring.one():
            return adj
        dinv = d.inverse()
        return TruncatedLaurentMatrix(self.ring, [[s * dinv for s in r] for r in adj.rows])

    def map_entries(self, ring: SeriesRing, fn) -> "TruncatedLaurentMatrix":
        return TruncatedLaurentMatrix(ring, [[fn(s) for s in r] for r in self.rows])

    # JSON -----------------------------------------------------------------
    def to_json(self) -> dict:
        data = {
            "nvars": self.nvars,
            "cap": self.cap,
            "pole_cap": self.pole_cap,
            "entries": [[s.to_json() for s in r] for r in self.rows],
        }
        if self.ring.modulus is not None:
            data["modulus"] = self.ring.modulus
        return data

    @classmethod
    def from_json(cls, data: dict | str) -> "TruncatedLaurentMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            ring = SeriesRing(int(data["nvars"]), int(data["cap"]),
                              int(data.get("pole_cap", 0)), data.get("modulus"))
            entries = data["entries"]
            rows = [[TruncatedSeries.from_json(ring, e) for e in r] for r in entries]
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"malformed matrix JSON: {exc}") from exc
        return cls(ring, rows)
