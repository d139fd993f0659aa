"""Exact two-phase simplex for ``min c.x`` s.t. ``A x = b, x >= 0``.

Dense rational tableau with Bland's rule, which rules out cycling; sizes here
are at most a few hundred columns by rank-many rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class Infeasible(Exception):
    pass


class Unbounded(Exception):
    pass


@dataclass(frozen=True)
class LPResult:
    value: Fraction
    x: tuple[Fraction, ...]


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int):
    p = tab[row][col]
    tab[row] = [v / p for v in tab[row]]
    pivot_row = tab[row]
    for r, line in enumerate(tab):
        if r != row and line[col] != 0:
            k = line[col]
            tab[r] = [a - k * b for a, b in zip(line, pivot_row)]
    basis[row] = col


def _run(tab, basis, cost_row: int, allowed: int):
    """Bland-rule simplex on ``tab`` minimizing the objective stored in row
    ``cost_row`` (reduced costs, last entry is minus the objective value).
    Only columns below ``allowed`` may enter."""
    nrows = cost_row
    while True:
        cost = tab[cost_row]
        col = next((j for j in range(allowed) if cost[j] < 0), None)
        if col is None:
            return
        best = None
        for r in range(nrows):
            a = tab[r][col]
            if a > 0:
                ratio = tab[r][-1] / a
                key = (ratio, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:
            raise Unbounded
        _pivot(tab, basis, best[1], col)


def minimize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    c = [Fraction(v) for v in c]
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    m, n = len(A), len(c)
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    # columns: n originals, m artificials, rhs
    tab = [A[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    phase1 = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n):
            phase1[j] -= A[i][j]
        phase1[-1] -= b[i]
    tab.append(phase1)
    _run(tab, basis, m, n + m)
    if tab[m][-1] != 0:
        raise Infeasible
    # drive zero-level artificials out of the basis; drop redundant rows
    r = 0
    while r < len(basis):
        if basis[r] >= n:
            col = next((j for j in range(n) if tab[r][j] != 0), None)
            if col is None:
                del tab[r]
                del basis[r]
                continue
            _pivot(tab, basis, r, col)
        r += 1
    rows = len(basis)
    tab = [line[:n] + [line[-1]] for line in tab[:rows]]
    obj = c + [Fraction(0)]
    for r in range(rows):
        k = obj[basis[r]]
        if k != 0:
            obj = [a - k * v for a, v in zip(obj, tab[r])]
    tab.append(obj)
    _run(tab, basis, rows, n)
    x = [Fraction(0)] * n
    for r in range(rows):
        x[basis[r]] = tab[r][-1]
    return LPResult(-tab[rows][-1], tuple(x))
