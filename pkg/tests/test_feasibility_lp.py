import itertools
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from bruhattits.concave.feasibility import Eps, feasible_point, leq, lt, solve_eps
from bruhattits.concave.lp import Infeasible, Unbounded, minimize


def satisfied(cons, x):
    for c in cons:
        v = sum(a * b for a, b in zip(c.coeffs, x))
        if c.bound.b < 0:
            if not v < c.bound.a:
                return False
        elif not v <= c.bound.a:
            return False
    return True


# Eps ---------------------------------------------------------------------------------

def test_eps_order():
    assert Eps(F(1), F(-1)) < Eps(F(1)) < Eps(F(1), F(1)) < Eps(F(2), F(-5))
    assert Eps(F(1), F(2)).at(F(1, 4)) == F(3, 2)
    assert (Eps(F(1), F(1)) + Eps(F(2), F(-3))).scale(F(1, 2)) == Eps(F(3, 2), F(-1))


# feasibility --------------------------------------------------------------------------

def test_open_interval():
    x = feasible_point([lt([1], 1), lt([-1], 0)], 1)
    assert x is not None and 0 < x[0] < 1


def test_point_and_empty():
    assert feasible_point([leq([1], 0), leq([-1], 0)], 1) == [0]
    assert feasible_point([lt([1], 0), leq([-1], 0)], 1) is None
    assert feasible_point([lt([1, 1], 1), leq([-1, 0], 0), leq([0, -1], -1)], 2) is None


def test_unconstrained_variables():
    assert feasible_point([], 3) == [0, 0, 0]
    assert solve_eps([leq([0, 1], 5)], 2) is not None


small = st.integers(-3, 3)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3), st.data())
def test_feasible_by_construction(n, data):
    x0 = [F(data.draw(st.integers(-6, 6)), data.draw(st.integers(1, 4))) for _ in range(n)]
    cons = []
    for _ in range(data.draw(st.integers(1, 8))):
        a = [data.draw(small) for _ in range(n)]
        v = sum(p * q for p, q in zip(a, x0))
        slack = F(data.draw(st.integers(0, 3)), 2)
        if slack > 0 and data.draw(st.booleans()):
            cons.append(lt(a, v + slack))
        else:
            cons.append(leq(a, v + slack))
    x = feasible_point(cons, n)
    assert x is not None and satisfied(cons, x)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_rank_two_against_grid(data):
    cons = []
    for _ in range(data.draw(st.integers(1, 6))):
        a = [data.draw(small), data.draw(small)]
        c = F(data.draw(st.integers(-4, 4)), data.draw(st.sampled_from([1, 2, 3])))
        cons.append((lt if data.draw(st.booleans()) else leq)(a, c))
    # keep the region inside the grid box
    cons += [leq([1, 0], 2), leq([-1, 0], 2), leq([0, 1], 2), leq([0, -1], 2)]
    x = feasible_point(cons, 2)
    if x is not None:
        assert satisfied(cons, x)
    else:
        # grid (i/12, j/12); every bound has denominator dividing 12
        I, J = np.meshgrid(np.arange(-24, 25), np.arange(-24, 25), indexing="ij")
        ok = np.ones_like(I, dtype=bool)
        for con in cons:
            lhs = int(con.coeffs[0]) * I + int(con.coeffs[1]) * J
            rhs = int(12 * con.bound.a)
            ok &= lhs < rhs if con.bound.b < 0 else lhs <= rhs
        assert not ok.any()


# LP ---------------------------------------------------------------------------------------

def test_lp_small():
    # min x + 2y s.t. x + y = 1
    res = minimize([1, 2], [[1, 1]], [1])
    assert res.value == 1 and res.x == (1, 0)
    with pytest.raises(Infeasible):
        minimize([1, 1], [[1, 1]], [-1])
    with pytest.raises(Unbounded):
        minimize([-1, 0], [[1, -1]], [0])


def test_lp_degenerate_beale():
    # a classic cycling instance for the largest-coefficient rule
    c = [F(-3, 4), 150, F(-1, 50), 6, 0, 0, 0]
    A = [[F(1, 4), -60, F(-1, 25), 9, 1, 0, 0],
         [F(1, 2), -90, F(-1, 50), 3, 0, 1, 0],
         [0, 0, 1, 0, 0, 0, 1]]
    res = minimize(c, A, [0, 0, 1])
    assert res.value == F(-1, 20)


def test_lp_redundant_rows():
    res = minimize([1, 1, 0], [[1, 0, 1], [2, 0, 2]], [1, 2])
    assert res.value == 0


def brute_lp(c, A, b):
    m, n = len(A), len(c)
    best = None
    for cols in itertools.combinations(range(n), m):
        sol = oracles._solve_columns([[A[i][j] for i in range(m)] for j in cols], b)
        if sol is None or any(v < 0 for v in sol):
            continue
        v = sum(c[j] * s for j, s in zip(cols, sol))
        best = v if best is None else min(best, v)
    return best


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_lp_against_basis_enumeration(m, extra, data):
    n = m + extra
    A = [[int(i == j) for j in range(m)] + [data.draw(small) for _ in range(extra)]
         for i in range(m)]
    b = [data.draw(small) for _ in range(m)]
    c = [data.draw(st.integers(0, 4)) for _ in range(n)]
    want = brute_lp(c, A, b)
    if want is None:
        with pytest.raises(Infeasible):
            minimize(c, A, b)
    else:
        res = minimize(c, A, b)
        assert res.value == want
        assert all(v >= 0 for v in res.x)
        assert all(sum(a * x for a, x in zip(row, res.x)) == bi for row, bi in zip(A, b))
