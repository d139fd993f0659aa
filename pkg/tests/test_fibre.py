import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from bruhattits.apartment import ApartmentPoint, alcove_vertices
from bruhattits.concave import ConcaveMap, combine, from_point
from bruhattits.errors import BadTypeVector, EmptySubset, IndexOutOfRange
from bruhattits.fibre import (SCALINGS, FibreRootDatum, facet_fibre, facet_points, fibre_roots,
                              generated_subsystem, mckay_ad, phi_theta, subdiagonal_fibre)
from bruhattits.rootsystem import build_root_system

TYPES = ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "D4"]

rationals = st.fractions(min_value=-2, max_value=2, max_denominator=12)


@st.composite
def points(draw, types=TYPES):
    t = draw(st.sampled_from(types))
    rank = build_root_system(t).rank
    return ApartmentPoint(t, tuple(draw(rationals) for _ in range(rank)))


def P(t, text):
    return ApartmentPoint.parse(t, text)


def test_examples():
    assert set(fibre_roots(ConcaveMap.constant("G2", 0)).roots) == set(build_root_system("G2").roots)
    assert phi_theta(P("G2", "0,1/2")).render() == "[1,0] [-1,0] [3,2] [-3,-2]"
    assert phi_theta(P("A2", "1/3,0")).render() == "[0,1] [0,-1]"
    assert len(phi_theta(P("G2", "1/9,1/6"))) == 0
    assert (1, 0) in phi_theta(P("G2", "0,1/2"))
    assert phi_theta(P("G2", "0,1/2")).to_json() == [[1, 0], [3, 2], [-1, 0], [-3, -2]]


@settings(max_examples=150, deadline=None)
@given(points())
def test_fibre_of_point_is_integral_roots(theta):
    fib = fibre_roots(from_point(theta))
    assert fib == phi_theta(theta)
    assert fib.is_closed()


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_fibre_of_sum_is_intersection(data):
    # a sum of point functions is tight at r exactly when every summand is
    t = data.draw(st.sampled_from(TYPES))
    pts = data.draw(st.lists(points([t]), min_size=1, max_size=3))
    fib = fibre_roots(combine([from_point(p) for p in pts]))
    expect = set.intersection(*(set(phi_theta(p).roots) for p in pts))
    assert set(fib.roots) == expect
    assert fib.is_closed()


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "A3", "B3", "C3"])
@pytest.mark.parametrize("scaling", SCALINGS)
def test_facet_fibre_two_routes(t, scaling):
    rank = build_root_system(t).rank
    for k in range(1, rank + 1):
        for subset in itertools.combinations(range(1, rank + 1), k):
            got = facet_fibre(t, scaling, subset)
            pts = facet_points(t, scaling, subset)
            route = set.intersection(*(set(phi_theta(p).roots) for p in pts))
            assert set(got.roots) == route
            assert got.is_closed()


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "A3", "B3", "C3", "D4"])
def test_facet_scalings_nest(t):
    rs = build_root_system(t)
    for k in range(1, rs.rank + 1):
        for subset in itertools.combinations(range(1, rs.rank + 1), k):
            shrunk = facet_fibre(t, "shrunk", subset)
            vertex = facet_fibre(t, "vertex", subset)
            lattice = facet_fibre(t, "lattice", subset)
            assert shrunk <= vertex <= lattice
            assert set(lattice.roots) == set(rs.roots)


def test_facet_examples():
    # a single G2 vertex: the rest of the extended diagram
    fib = facet_fibre("G2", "vertex", [2])
    assert set(fib.roots) == set(generated_subsystem("G2", [(1, 0), (3, 2)]).roots)
    assert len(facet_fibre("G2", "shrunk", [1, 2])) == 0
    assert [str(p) for p in facet_points("B2", "lattice", [2])] == ["[0,1]"]
    assert facet_points("A2", "shrunk", [1]) == [alcove_vertices("A2")[0].scale(F(1, 3))]
    with pytest.raises(EmptySubset):
        facet_fibre("A2", "vertex", [])
    with pytest.raises(IndexOutOfRange):
        facet_fibre("A2", "vertex", [3])
    with pytest.raises(ValueError):
        facet_points("A2", "bogus", [1])


def test_subdiagonal():
    fs = [from_point(P("G2", "1/9,0")), from_point(P("G2", "0,1/6"))]
    assert subdiagonal_fibre(fs, [1]) == fibre_roots(fs[0])
    assert len(subdiagonal_fibre(fs, [1, 2])) == 0
    # walking back to the origin: the sum is not tight anywhere
    rev = [from_point(P("A1", "1/2")), from_point(P("A1", "-1/2"))]
    assert len(subdiagonal_fibre(rev, [1, 2])) == 0
    zero = [ConcaveMap.constant("B2", 0)] * 2
    assert len(subdiagonal_fibre(zero, [1, 2])) == 8


def test_generated_subsystem():
    assert len(generated_subsystem("G2", [(1, 0), (0, 1)])) == 12
    assert generated_subsystem("G2", [(1, 0), (3, 2)]).render() == "[1,0] [-1,0] [3,2] [-3,-2]"
    assert len(generated_subsystem("A3", [])) == 0
    assert generated_subsystem("B2", [(1, 0)]).is_closed()
    assert not FibreRootDatum(build_root_system("A2").dynkin, ((1, 0),)).is_closed()


def test_mckay_a1():
    m = mckay_ad(3, (1,), "A1")
    assert [str(c.theta) for c in m.components] == ["[1/3]", "[2/3]"]
    assert [c.tau for c in m.components] == [(1,), (2,)]
    assert m.end_types == ((1,), (2,))
    assert m.node_functions == (ConcaveMap("A1", (0, 2), 0),)
    assert len(m.node_fibres[0]) == 0
    data = m.to_json()
    assert data["alcove_reduced"] and data["nodes"][0]["fibre"] == []


def test_mckay_shapes():
    m = mckay_ad(5, (1, 2), "A2")
    assert len(m.components) == 4 and len(m.node_functions) == 3
    assert [str(c.theta) for c in m.components] == ["[1/5,2/5]", "[1/5,3/5]", "[3/5,1/5]", "[2/5,1/5]"]
    assert len(mckay_ad(2, (1,), "A1").node_functions) == 0
    zero = mckay_ad(4, (0, 0), "A2")
    assert all(len(fib) == 6 for fib in zero.node_fibres)
    for args in [(1, (1,), "A1"), (3, (1, 2), "A1"), (3, (3,), "A1"), (3, (-1,), "A1")]:
        with pytest.raises(BadTypeVector):
            mckay_ad(*args)
