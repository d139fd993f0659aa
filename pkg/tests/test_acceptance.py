"""Acceptance suite: one test and one PASS/FAIL line per criterion."""

import itertools
import random
import time
from fractions import Fraction as F

import oracles
from bruhattits import (ApartmentPoint, BoundedSet, ConcaveMap, SeriesRing,
                        TruncatedLaurentMatrix, TypeII, TypeIII, build_root_system, ceiling,
                        classify, combine, embed_uniformizer, from_point, from_set,
                        group_constants, is_member, pattern, pointwise_sup, regularize,
                        sample_member, specialize_diag)
from bruhattits.apartment import alcove_vertices
from bruhattits.fibre import facet_fibre, generated_subsystem
from bruhattits.rootsystem import coxeter_number


def P(dynkin, *coords):
    return ApartmentPoint(dynkin, tuple(F(c) for c in coords))


def table(dynkin, positive, negative):
    return ConcaveMap.from_tables(dynkin, positive, negative)


M_A2 = table("A2", (0, 0, 0), (1, 1, 2))
M_B2 = table("B2", (0, 0, 0, 0), (1, 1, 2, 2))
M_G2 = table("G2", (0,) * 6, (1, 1, 2, 2, 2, 2))


# 1 ---------------------------------------------------------------------------------

TABLES = {
    "A2": {
        "thetas": [("1/3", "0"), ("0", "1/3")],
        "m": [((0, 0, 0), (1, 0, 1)), ((0, 0, 0), (0, 1, 1))],
        "m_sum_point": ((0, 0, 0), (1, 1, 1)),
        "mcal": M_A2,
    },
    "B2": {
        "thetas": [("1/3", "0"), ("0", "1/6")],
        "m": [((0, 0, 0, 0), (1, 0, 1, 1)), ((0, 0, 0, 0), (0, 1, 1, 1))],
        "m_sum_point": ((0, 0, 0, 0), (1, 1, 1, 1)),
        "mcal": M_B2,
    },
    "G2": {
        "thetas": [("1/9", "0"), ("0", "1/6")],
        "m": [((0,) * 6, (1, 0, 1, 1, 1, 1)), ((0,) * 6, (0, 1, 1, 1, 1, 1))],
        "m_sum_point": ((0,) * 6, (1,) * 6),
        "mcal": M_G2,
    },
}


def test_criterion_01_tables(report):
    bad = []
    for dynkin, data in TABLES.items():
        p1, p2 = (P(dynkin, *t) for t in data["thetas"])
        for p, (pos, neg) in zip((p1, p2), data["m"]):
            if from_point(p) != table(dynkin, pos, neg):
                bad.append(f"{dynkin} m({p})")
        if from_point(p1 + p2) != table(dynkin, *data["m_sum_point"]):
            bad.append(f"{dynkin} m(theta1+theta2)")
        if combine([from_point(p1), from_point(p2)]) != data["mcal"]:
            bad.append(f"{dynkin} sum")
    report(1, not bad, "A2, B2, G2 tables exact" if not bad else "; ".join(bad))
    assert not bad


# 2 ---------------------------------------------------------------------------------

def test_criterion_02_g2_type_three(report):
    t0 = time.perf_counter()
    w = classify(M_G2)
    cert_ok = isinstance(w, TypeIII)
    hit = oracles.grid_witness("G2", M_G2.values, w.certificate) if cert_ok else "n/a"
    elapsed = time.perf_counter() - t0
    ok = cert_ok and hit is None and elapsed < 1
    report(2, ok, f"{w.describe()}; grid witness {hit}; {elapsed:.2f}s")
    assert cert_ok and hit is None
    assert elapsed < 1


# 3 ---------------------------------------------------------------------------------

def test_criterion_03_a2_b2_type_two(report):
    notes = []
    for m in (M_A2, M_B2):
        w = classify(m)
        if not (isinstance(w, TypeII) and from_set(w.omega) == m):
            notes.append(f"{m.dynkin}: {w.describe()}")
    b = P("A2", "1/3", "1/3")
    if from_set(BoundedSet((b, b.scale(2)))) != M_A2:
        notes.append("A2 {b, 2b}")
    e = e2 = F(1, 2)
    b = P("B2", "1/3", "1/6")
    b2 = P("B2", (2 - e) / 3, (2 + e2) / 6)
    got = from_set(BoundedSet((b, b2)))
    if got != M_B2:
        notes.append("B2 e=e'=1/2 gives " + ",".join(str(v) for v in got.values))
    report(3, not notes, "; ".join(notes) or "witnesses round-trip; explicit sets agree")
    assert not notes


# 4 ---------------------------------------------------------------------------------

def test_criterion_04_g2_regularization(report):
    fp = regularize(M_G2)
    diffs = M_G2.differences(fp)
    dilated = BoundedSet((P("G2", 0, 0),) + tuple(v.scale(2) for v in alcove_vertices("G2")))
    oracle = oracles.regularize_by_vertices("G2", M_G2.values)
    ok = (diffs == [(-1, -1)] and fp[(-1, -1)] == 1 and fp == from_set(dilated)
          and list(fp.values) == oracle)
    report(4, ok, f"differs at {diffs}, f'(-1,-1) = {fp[(-1, -1)]}")
    assert diffs == [(-1, -1)] and fp[(-1, -1)] == 1
    assert fp == from_set(dilated)
    assert list(fp.values) == oracle


# 5 ---------------------------------------------------------------------------------

def test_criterion_05_matrix_patterns(report):
    fs = [from_point(P("A2", "1/3", 0)), from_point(P("A2", 0, "1/3"))]
    sl3 = pattern(fs)
    z = (0, 0)
    expected = ((None, z, z), ((1, 0), None, z), ((1, 1), (0, 1), None))
    ok3 = sl3.bounds == expected

    th = [from_point(P("A1", "1/2")), from_point(P("A1", "1/3"))]
    diag = pattern([combine(th)])
    ok2 = diag.bound(1, 2) == (0,) and diag.bound(2, 1) == (2,)
    ring = SeriesRing(1, 4)
    good = TruncatedLaurentMatrix.from_monomials(ring, [[(1, (0,)), (1, (0,))], [(1, (2,)), None]])
    good = good.with_entry(1, 1, ring.from_terms({(0,): 1, (2,): 1}))
    ok2 = ok2 and is_member(good, diag)
    for seed in range(50):
        M = sample_member(pattern(th), seed)
        ok2 = ok2 and is_member(specialize_diag(M), diag)

    rev = pattern([combine([from_point(P("A1", "1/2")), from_point(P("A1", "-1/2"))])])
    okr = rev.bound(1, 2) == (1,) and rev.bound(2, 1) == (1,)
    ok = ok3 and ok2 and okr
    report(5, ok, f"SL3 {'ok' if ok3 else sl3.bounds}; SL2 diag {diag.bound(1, 2)},"
                  f"{diag.bound(2, 1)}; revisit {rev.bound(1, 2)},{rev.bound(2, 1)}")
    assert ok3 and ok2 and okr


# 6 ---------------------------------------------------------------------------------

def _alcove_point(rng, dynkin):
    rs = build_root_system(dynkin)
    while True:
        d = rng.randint(2, 12)
        coords = [F(rng.randint(0, d), d) for _ in range(rs.rank)]
        if sum(c * x for c, x in zip(rs.highest, coords)) < 1:
            return ApartmentPoint(rs.dynkin, tuple(coords))


def _closure_failures(dynkin, n, pairs):
    fails = 0
    for k in range(pairs):
        rng = random.Random(f"{dynkin}-{n}-{k}")
        pat = pattern([from_point(_alcove_point(rng, dynkin)) for _ in range(n)])
        A = sample_member(pat, 2 * k)
        B = sample_member(pat, 2 * k + 1)
        adj = A.adjugate()
        ident = TruncatedLaurentMatrix.identity(A.ring, A.size)
        if not (is_member(A, pat) and is_member(B, pat) and is_member(A @ B, pat)
                and is_member(adj, pat) and A @ adj == ident):
            fails += 1
    return fails


def test_criterion_06_group_closure(report):
    results = {(d, n): _closure_failures(d, n, 1000) for d in ("A1", "A2") for n in (1, 2, 3)}
    total = sum(results.values())
    report(6, total == 0, f"{len(results)} configurations x 1000 pairs, {total} failures")
    assert total == 0


# 7 ---------------------------------------------------------------------------------

def _uniformizer_discrepancies(matrices, families):
    pats = [(pattern(Fs), pattern([pointwise_sup(Fs)])) for Fs in families]
    checked = bad = 0
    for M in matrices:
        E = embed_uniformizer(M, 2)
        for pF, pS in pats:
            checked += 1
            bad += is_member(E, pF) != is_member(M, pS)
    return checked, bad


def _sl2_grid(ring):
    opts = [None] + [(c, (e,)) for c in (1, -1) for e in range(4)]
    for a, b, c, d in itertools.product(opts, repeat=4):
        yield TruncatedLaurentMatrix.from_monomials(ring, [[a, b], [c, d]])


def _sl3_grid(ring):
    opts = [None] + [(1, (e,)) for e in range(4)]
    for off in itertools.product(opts, repeat=6):
        it = iter(off)
        yield TruncatedLaurentMatrix.from_monomials(
            ring, [[(1, (0,)) if i == j else next(it) for j in range(3)] for i in range(3)])


def test_criterion_07_uniformizer(report):
    ring = SeriesRing(1, 4)
    a1 = lambda up, down: ConcaveMap("A1", (up, down), 0)  # noqa: E731
    sl2 = [(a1(0, 0), a1(0, 0)), (a1(0, 1), a1(0, 1)), (a1(0, 1), a1(0, 2)),
           (a1(1, 0), a1(0, 1)), (a1(2, 1), a1(1, 3)), (a1(0, 2), a1(1, 0)),
           (a1(1, 1), a1(1, 1)), (a1(0, 3), a1(3, 0)), (a1(-1, 1), a1(1, -1))]
    pts = [P("A2", "1/3", 0), P("A2", 0, "1/3"), P("A2", "1/3", "1/3"), P("A2", "1/2", "1/4")]
    sl3 = [(from_point(pts[0]), from_point(pts[1])),
           (from_point(pts[2]), from_point(pts[3])),
           (from_point(pts[1]), from_point(pts[2] + pts[3]))]
    n2, b2 = _uniformizer_discrepancies(_sl2_grid(ring), sl2)
    n3, b3 = _uniformizer_discrepancies(_sl3_grid(ring), sl3)
    report(7, b2 + b3 == 0, f"SL2 {n2} checks, SL3 {n3} checks, {b2 + b3} discrepancies")
    assert b2 + b3 == 0


# 8 ---------------------------------------------------------------------------------

def test_criterion_08_optimal_type_a(report):
    seen = {}
    for dynkin in ("A2", "A3"):
        rng = random.Random(f"optimal-{dynkin}")
        for _ in range(500):
            zero, vals = oracles.random_concave(dynkin, rng)
            w = classify(ceiling(ConcaveMap(dynkin, vals, zero)))
            key = (dynkin, type(w).__name__)
            seen[key] = seen.get(key, 0) + 1
    bad = sum(v for (d, kind), v in seen.items() if kind == "TypeIII")
    report(8, bad == 0, ", ".join(f"{d} {k}: {v}" for (d, k), v in sorted(seen.items())))
    assert bad == 0


# 9 ---------------------------------------------------------------------------------

def _facet_expectations(dynkin):
    rs = build_root_system(dynkin)
    for size in range(1, rs.rank + 1):
        for subset in itertools.combinations(range(1, rs.rank + 1), size):
            rest = [rs.simple_root(i) for i in range(1, rs.rank + 1) if i not in subset]
            yield subset, {
                "vertex": generated_subsystem(dynkin, rest + [rs.highest]),
                "shrunk": generated_subsystem(dynkin, rest),
                "lattice": generated_subsystem(dynkin, rs.roots),
            }


def test_criterion_09_fibre_corollaries(report):
    checked, mismatches = 0, []
    for dynkin in ("A3", "B3", "G2"):
        for subset, expect in _facet_expectations(dynkin):
            for scaling, want in expect.items():
                checked += 1
                got = facet_fibre(dynkin, scaling, subset)
                if got != want:
                    mismatches.append(f"{dynkin} {scaling} I={list(subset)}: "
                                      f"{len(got)} roots vs {len(want)}")
    report(9, not mismatches, f"{checked} cases, {len(mismatches)} mismatches"
           + (": " + "; ".join(mismatches) if mismatches else ""))
    assert not mismatches, "\n".join(mismatches)


# 10 --------------------------------------------------------------------------------

def test_criterion_10_constants(report):
    bounds = {"E6": 27, "E7": 56}
    for n in range(2, 8):
        for fam in "BCD":
            if fam != "D" or n >= 4:
                bounds[f"{fam}{n}"] = 2 * n + 1
    coxeter = {f"A{n}": n + 1 for n in range(1, 9)}
    coxeter.update({f"B{n}": 2 * n for n in range(2, 8)})
    coxeter.update({f"C{n}": 2 * n for n in range(2, 8)})
    coxeter.update({f"D{n}": 2 * n - 2 for n in range(4, 8)})
    coxeter.update({"G2": 6, "F4": 12, "E6": 12, "E7": 18, "E8": 30})
    bad = [t for t, b in bounds.items() if group_constants(t).mixed_char_bound != b]
    bad += [t for t, h in coxeter.items()
            if coxeter_number(t) != h or group_constants(t).coxeter != h]
    report(10, not bad, f"{len(bounds)} bounds, {len(coxeter)} Coxeter numbers"
           + (f"; wrong: {bad}" if bad else ""))
    assert not bad


# 11 --------------------------------------------------------------------------------

def test_criterion_11_concavity_oracle(report):
    from bruhattits.concave.maps import concave_values

    counts = {}
    bad = 0
    for dynkin in ("A2", "B2"):
        total = concave = 0
        for cand, mask in oracles.concave_box(dynkin, -1, 2):
            for row, m in zip(cand.tolist(), mask.tolist()):
                total += 1
                concave += m
                bad += concave_values(dynkin, row[1:], row[0]) != m
        counts[dynkin] = (total, concave)
    report(11, bad == 0, ", ".join(f"{d}: {c}/{t} concave" for d, (t, c) in counts.items())
           + f", {bad} disagreements")
    assert bad == 0
