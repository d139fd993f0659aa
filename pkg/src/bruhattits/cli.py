"""Command-line front end.

Every verb maps onto one library operation.  Rationals print as ``p/q``,
roots as coefficient arrays such as ``[3,2]``.  Arguments that take JSON
accept either a literal or ``@path`` to read it from a file.

Exit status: 0 on success, 1 on a domain error, 2 on a parse error; the
error class name is written to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import apartment, concave, fibre, seriesgroup
from ._exact import fmt, to_fraction
from .apartment import ApartmentPoint, BoundedSet
from .concave import ConcaveMap, ConcaveTuple
from .errors import BruhatTitsError, ParseError, RankMismatch
from .rootsystem import DynkinType, build_root_system, group_constants, root_key
from .seriesgroup import TruncatedLaurentMatrix, ValuationPattern


def render_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Left-aligned fixed-width columns separated by two spaces."""
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    width = max(len(r) for r in cells)
    widths = [max(len(r[i]) for r in cells if i < len(r)) for i in range(width)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


# argument helpers ------------------------------------------------------------

def load_json(arg: str):
    try:
        text = Path(arg[1:]).read_text() if arg.startswith("@") else arg
        return json.loads(text)
    except OSError as exc:
        raise ParseError(f"cannot read {arg[1:]}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {arg!r}: {exc.msg}") from exc


def _dynkin(text: str) -> DynkinType:
    return DynkinType.parse(text)


def _indices(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ParseError(f"bad index list {text!r}") from exc


def _point(dynkin, text: str) -> ApartmentPoint:
    return ApartmentPoint.parse(dynkin, text)


def _concave(dynkin, arg: str) -> ConcaveMap:
    f = ConcaveMap.from_json(load_json(arg))
    if f.dynkin != dynkin:
        raise RankMismatch(f"concave map is of type {f.dynkin}, expected {dynkin}")
    return f


def _tuple_from(args, dynkin) -> ConcaveTuple:
    maps = [concave.from_point(_point(dynkin, t)) for t in args.theta or []]
    maps += [_concave(dynkin, c) for c in args.concave or []]
    if not maps:
        raise ParseError("give at least one --theta or --concave")
    return ConcaveTuple(tuple(maps))


def _emit(args, table: str, data) -> str:
    if args.format == "json":
        return json.dumps(data, indent=2) + "\n"
    return table


def _root_header(rs) -> list[str]:
    return ["root"] + [root_key(r) for r in rs.roots]


def _map_table(rs, labelled: Sequence[tuple[str, ConcaveMap]]) -> str:
    rows = [[label] + [fmt(v) for v in f.values] for label, f in labelled]
    return render_table(_root_header(rs), rows)


# verbs ---------------------------------------------------------------------

def cmd_roots(args) -> str:
    rs = build_root_system(args.type)
    rows = [[root_key(r), str(sum(r)), "+" if rs.is_positive(r) else "-"] for r in rs.roots]
    table = render_table(["root", "height", "sign"], rows)
    table += f"highest {root_key(rs.highest)}\n"
    data = {
        "type": str(rs.dynkin),
        "cartan": [list(row) for row in rs.cartan],
        "positives": [list(r) for r in rs.positives],
        "negatives": [list(r) for r in rs.negatives],
        "highest": list(rs.highest),
    }
    return _emit(args, table, data)


def cmd_constants(args) -> str:
    g = group_constants(args.type)
    cond = f"p {'>' if g.strict else '>='} {g.mixed_char_bound}"
    rows = [["coxeter", str(g.coxeter)], ["mixed_char_bound", str(g.mixed_char_bound)],
            ["condition", cond], ["min_faithful_dim", str(g.min_faithful_dim)]]
    data = {"type": str(args.type), "coxeter": g.coxeter,
            "mixed_char_bound": g.mixed_char_bound, "condition": cond,
            "min_faithful_dim": g.min_faithful_dim}
    return _emit(args, render_table(["constant", "value"], rows), data)


def cmd_mvals(args) -> str:
    rs = build_root_system(args.type)
    points = [_point(rs.dynkin, t) for t in args.theta]
    rows = []
    names = [f"theta{k + 1}" for k in range(len(points))]
    for name, p in zip(names, points):
        rows.append([f"r({name})"] + [fmt(apartment.pairing(r, p)) for r in rs.roots])
        rows.append([f"m({name})"] + [str(apartment.m_point(r, p)) for r in rs.roots])
    if len(points) > 1:
        total = points[0]
        for p in points[1:]:
            total = total + p
        summed = "+".join(names)
        rows.append([f"r({summed})"] + [fmt(apartment.pairing(r, total)) for r in rs.roots])
        rows.append([f"m({summed})"] + [str(apartment.m_point(r, total)) for r in rs.roots])
        combined = concave.combine([concave.from_point(p) for p in points])
        rows.append(["sum m"] + [fmt(v) for v in combined.values])
    data = {"type": str(rs.dynkin), "roots": [root_key(r) for r in rs.roots],
            "rows": {row[0]: row[1:] for row in rows}}
    return _emit(args, render_table(_root_header(rs), rows), data)


def cmd_msets(args) -> str:
    rs = build_root_system(args.type)
    omega = BoundedSet(tuple(_point(rs.dynkin, t) for t in args.point))
    rows = [[f"r(p{k + 1})"] + [fmt(apartment.pairing(r, p)) for r in rs.roots]
            for k, p in enumerate(omega)]
    f = concave.from_set(omega)
    rows.append(["m(omega)"] + [fmt(v) for v in f.values])
    return _emit(args, render_table(_root_header(rs), rows), f.to_json())


def cmd_vertices(args) -> str:
    rs = build_root_system(args.type)
    verts = apartment.alcove_vertices(rs.dynkin)
    rows = [["0", str(ApartmentPoint.origin(rs.dynkin)), "-", "1"]]
    rows += [[str(i + 1), str(v), str(rs.highest[i]), str(apartment.d_alpha(rs.dynkin, i + 1))]
             for i, v in enumerate(verts)]
    data = {"type": str(rs.dynkin), "origin": ApartmentPoint.origin(rs.dynkin).to_json(),
            "vertices": [v.to_json() for v in verts],
            "d_alpha": [apartment.d_alpha(rs.dynkin, i + 1) for i in range(rs.rank)]}
    return _emit(args, render_table(["alpha", "vertex", "c", "d"], rows), data)


def cmd_barycenter(args) -> str:
    p = apartment.barycenter(args.type, _indices(args.subset))
    return _emit(args, f"{p}\n", p.to_json())


def cmd_reduce(args) -> str:
    p = apartment.alcove_reduce(_point(args.type, args.theta))
    return _emit(args, f"{p}\n", p.to_json())


def cmd_concave_check(args) -> str:
    f = _concave(args.type, args.concave)
    bad = concave.find_violation(f)
    if bad is None:
        return _emit(args, "concave\n", {"concave": True})
    text = " ".join(root_key(r) for r in bad)
    return _emit(args, f"not concave violation={text}\n",
                 {"concave": False, "violation": [list(r) for r in bad]})


def cmd_classify(args) -> str:
    w = concave.classify(_concave(args.type, args.concave))
    return _emit(args, w.describe() + "\n", concave.witness_json(w))


def cmd_fprime(args) -> str:
    f = _concave(args.type, args.concave)
    g = concave.regularize(f)
    rs = build_root_system(args.type)
    return _emit(args, _map_table(rs, [("f", f), ("f'", g)]), g.to_json())


def cmd_moyprasad(args) -> str:
    rs = build_root_system(args.type)
    d = concave.moy_prasad(_point(rs.dynkin, args.theta), to_fraction(args.depth))
    table = _map_table(rs, [("level", d.root_values)]) + f"torus_level {d.torus_level}\n"
    data = {"theta": d.theta.to_json(), "depth": fmt(d.depth),
            "root_values": d.root_values.to_json(), "torus_level": d.torus_level}
    return _emit(args, table, data)


def _pattern_table(pat: ValuationPattern) -> str:
    rows = [["*" if b is None else "(" + ",".join(map(str, b)) + ")" for b in row]
            for row in pat.bounds]
    return render_table([f"c{j + 1}" for j in range(pat.m)], rows)


def cmd_pattern(args) -> str:
    rs = build_root_system(args.type)
    if args.depth is not None:
        if len(args.theta or []) != 1 or args.concave:
            raise ParseError("--depth needs exactly one --theta")
        datum = concave.moy_prasad(_point(rs.dynkin, args.theta[0]), to_fraction(args.depth))
        pat = seriesgroup.moy_prasad_pattern(datum)
    else:
        fs = _tuple_from(args, rs.dynkin)
        if args.diag:
            fs = ConcaveTuple((concave.combine(fs),))
        pat = seriesgroup.pattern(fs)
    return _emit(args, _pattern_table(pat), pat.to_json())


def _matrix(arg: str) -> TruncatedLaurentMatrix:
    return TruncatedLaurentMatrix.from_json(load_json(arg))


def _matrix_table(M: TruncatedLaurentMatrix) -> str:
    return render_table([f"c{j + 1}" for j in range(M.size)],
                        [[str(s) for s in row] for row in M.rows])


def _emit_matrix(args, M: TruncatedLaurentMatrix) -> str:
    return _emit(args, _matrix_table(M), M.to_json())


def cmd_member(args) -> str:
    ok = seriesgroup.is_member(_matrix(args.matrix),
                               ValuationPattern.from_json(load_json(args.pattern)))
    return _emit(args, f"{'true' if ok else 'false'}\n", {"member": ok})


def cmd_multiply(args) -> str:
    return _emit_matrix(args, _matrix(args.lhs).multiply(_matrix(args.rhs)))


def cmd_sample(args) -> str:
    pat = ValuationPattern.from_json(load_json(args.pattern))
    M = seriesgroup.sample_member(pat, args.seed, cap=args.cap, pole_cap=args.pole_cap,
                                  generators=args.generators)
    return _emit_matrix(args, M)


def cmd_diag(args) -> str:
    return _emit_matrix(args, seriesgroup.specialize_diag(_matrix(args.matrix)))


def cmd_embed(args) -> str:
    return _emit_matrix(args, seriesgroup.embed_uniformizer(_matrix(args.matrix), args.n))


def _emit_fibre(args, datum: fibre.FibreRootDatum) -> str:
    return _emit(args, (datum.render() or "(empty)") + "\n", datum.to_json())


def cmd_fibre(args) -> str:
    return _emit_fibre(args, fibre.fibre_roots(_concave(args.type, args.concave)))


def cmd_phitheta(args) -> str:
    return _emit_fibre(args, fibre.phi_theta(_point(args.type, args.theta)))


def cmd_facet(args) -> str:
    return _emit_fibre(args, fibre.facet_fibre(args.type, args.scaling, _indices(args.subset)))


def cmd_subdiag(args) -> str:
    fs = _tuple_from(args, args.type)
    return _emit_fibre(args, fibre.subdiagonal_fibre(fs, _indices(args.subset)))


def cmd_mckay(args) -> str:
    data = fibre.mckay_ad(args.d, _indices(args.tau), args.type)
    rs = build_root_system(data.dynkin)
    lines = [f"d {data.d}  tau {list(data.tau)}  tau_bar {list(data.end_types[1])}",
             "theta_s alcove-reduced"]
    comp = render_table(["s", "tau_s", "theta_s"],
                        [[str(c.s), str(list(c.tau)), str(c.theta)] for c in data.components])
    nodes = _map_table(rs, [(f"f{s + 1}", f) for s, f in enumerate(data.node_functions)])
    fibres = "".join(f"fibre{s + 1} {fib.render() or '(empty)'}\n" for s, fib in enumerate(data.node_fibres))
    table = "\n".join(lines) + "\n" + comp + (nodes + fibres if data.node_functions else "")
    return _emit(args, table, data.to_json())


# parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bruhattits",
                                     description="Exact root-system and concave-function computations.")
    parser.add_argument("--format", choices=("table", "json"), default="table")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_text, typed=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("table", "json"), default=argparse.SUPPRESS)
        if typed:
            p.add_argument("type", help="Dynkin type such as A2 or G2")
        p.set_defaults(fn=fn)
        return p

    verb("roots", cmd_roots, "list the roots in canonical order")
    verb("constants", cmd_constants, "Coxeter number and characteristic bounds")
    verb("mvals", cmd_mvals, "r(theta) and m_r(theta) tables").add_argument(
        "--theta", action="append", required=True, help="coweight coordinates, e.g. 1/9,0")
    verb("msets", cmd_msets, "m_r of a finite point set").add_argument(
        "--point", action="append", required=True)
    verb("vertices", cmd_vertices, "alcove vertices and d_alpha")
    verb("barycenter", cmd_barycenter, "barycenter of an alcove facet").add_argument(
        "--subset", required=True, help="affine simple root indices, 0 for alpha_0")
    verb("reduce", cmd_reduce, "closed-alcove representative").add_argument(
        "--theta", required=True)
    for name, fn, text in (("concave-check", cmd_concave_check, "pairwise concavity test"),
                           ("classify", cmd_classify, "type I/II/III classification"),
                           ("fprime", cmd_fprime, "the f' regularization"),
                           ("fibre", cmd_fibre, "closed-fibre root datum")):
        verb(name, fn, text).add_argument("--concave", required=True, help="JSON or @file")
    p = verb("moyprasad", cmd_moyprasad, "Moy-Prasad root levels")
    p.add_argument("--theta", required=True)
    p.add_argument("--depth", required=True)
    p = verb("pattern", cmd_pattern, "SL_m valuation pattern")
    p.add_argument("--theta", action="append")
    p.add_argument("--concave", action="append")
    p.add_argument("--diag", action="store_true", help="specialize to one variable first")
    p.add_argument("--depth", help="Moy-Prasad depth for a single --theta")
    p = verb("member", cmd_member, "valuation-pattern membership", typed=False)
    p.add_argument("--matrix", required=True)
    p.add_argument("--pattern", required=True)
    p = verb("multiply", cmd_multiply, "matrix product", typed=False)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p = verb("sample", cmd_sample, "seeded pattern member", typed=False)
    p.add_argument("--pattern", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--cap", type=int, default=4)
    p.add_argument("--pole-cap", type=int, default=0)
    p.add_argument("--generators", type=int)
    verb("diag", cmd_diag, "set all variables equal", typed=False).add_argument(
        "--matrix", required=True)
    p = verb("embed", cmd_embed, "substitute t = z1...zn", typed=False)
    p.add_argument("--matrix", required=True)
    p.add_argument("--n", type=int, required=True)
    verb("phitheta", cmd_phitheta, "roots integral at theta").add_argument(
        "--theta", required=True)
    p = verb("facet", cmd_facet, "fibre of scaled alcove vertices")
    p.add_argument("--scaling", choices=fibre.SCALINGS, required=True)
    p.add_argument("--subset", required=True, help="simple root indices, e.g. 1,2")
    p = verb("subdiag", cmd_subdiag, "fibre of a partial sum of a concave tuple")
    p.add_argument("--theta", action="append")
    p.add_argument("--concave", action="append")
    p.add_argument("--subset", required=True)
    p = verb("mckay", cmd_mckay, "A_d degeneration data")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--tau", required=True, help="type vector, e.g. 1,2")
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "type", None) is not None:
            args.type = _dynkin(args.type)
        out.write(args.fn(args))
    except ParseError as exc:
        err.write(f"ParseError: {exc}\n")
        return 2
    except BruhatTitsError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
