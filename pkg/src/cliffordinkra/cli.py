"""Command-line front end: ``cliffordinkra <command> ...``.

Structured results go to stdout as canonical JSON (sorted keys); diagnostics
go to stderr. Exit codes: 0 success (an "invalid" verdict is still a
success), 2 unreadable input, 3 precondition failure, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Callable, Dict, List, Optional

from . import cohomology, construct, f2code, geometry, graph
from .f2code import BudgetExceeded, LinearCode
from .graph import Cliffordinkra

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET = 0, 2, 3, 4


class InputError(Exception):
    """Input that cannot be read or does not fit its schema."""


class _Graph:
    """Marks a payload that is a graph, so ``--format dot`` can draw it."""

    def __init__(self, g: Cliffordinkra, extra: Optional[dict] = None):
        self.g = g
        self.extra = extra


# -- input ---------------------------------------------------------------------


def _read_text(path: Optional[str]) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _load_json(path: Optional[str]):
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path or 'stdin'}: not JSON ({exc})") from exc


def _load_graph(path: Optional[str]) -> Cliffordinkra:
    data = _load_json(path)
    # Accept a bare graph or any payload carrying one under "graph".
    if isinstance(data, dict) and "graph" in data and "edges" not in data:
        data = data["graph"]
    try:
        return Cliffordinkra.from_dict(data)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"{path or 'stdin'}: not a graph ({exc})") from exc


def _parse_code(n: int, code) -> LinearCode:
    if isinstance(code, str):
        return f2code.standard_code(code, n)
    return LinearCode(n, list(code))


def _load_spec(path: Optional[str]) -> construct.QuotientSpec:
    data = _load_json(path)
    try:
        n = int(data["n"])
        code = _parse_code(n, data.get("code", []))
        signs = data.get("signs")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path or 'stdin'}: not a quotient spec ({exc})") from exc
    return construct.QuotientSpec.make(n, code, signs)


def _parse_vertices(text: str) -> List[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"bad vertex list {text!r}") from exc


# -- commands ------------------------------------------------------------------


def cmd_cube(args):
    return _Graph(construct.cube(args.n))


def cmd_quotient(args):
    if args.n is not None:
        text = args.code or ""
        code = _parse_code(args.n, text if text and not set(text) <= set("01,") else
                           [w for w in text.split(",") if w])
        spec = construct.QuotientSpec.make(args.n, code, args.signs)
    else:
        spec = _load_spec(args.input)
    return _Graph(construct.quotient(spec))


def cmd_validate(args):
    g = _load_graph(args.input)
    if args.signature:
        p, q = (int(t) for t in args.signature.split(","))
        report = construct.clpq_validate(g, p, q)
    else:
        report = graph.validate(g)
    return report.to_dict()


def cmd_switch(args):
    g = _load_graph(args.input)
    s = _parse_vertices(args.vertices)
    bad = [v for v in s if not 0 <= v < g.num_vertices]
    if bad:
        raise ValueError(f"vertices out of range: {bad}")
    return _Graph(graph.vertex_switch(g, s))


def cmd_matrices(args):
    g = _load_graph(args.input)
    if args.signature:
        p, q = (int(t) for t in args.signature.split(","))
        mats = construct.clpq_matrices(g, p, q)
    else:
        p, q = 0, g.n
        mats = graph.to_matrices(g)
    order = graph.default_order(g)
    return {"n": g.n, "signature": [p, q], "dimension": g.num_vertices,
            "num_bosons": len(g.bosons),
            "order": order,
            "parity": [g.parity[v] for v in order],
            "matrices": [m.to_rows() for m in mats]}


def cmd_from_matrices(args):
    data = _load_json(args.input)
    try:
        mats = [graph.SignedPermMatrix.from_dense(m) for m in data["matrices"]]
        parity = data.get("parity", data.get("num_bosons"))
        if parity is None:
            raise KeyError("parity or num_bosons")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"not a matrix payload ({exc})") from exc
    g = graph.from_matrices(mats, parity)
    report = graph.validate(g)
    relations = graph.verify_clifford(mats)
    return _Graph(g, {"relations_ok": relations, "valid": report.ok})


def cmd_verify(args):
    """Matrices payload -> graph -> matrices; report whether it round-trips."""
    data = _load_json(args.input)
    try:
        rows = data["matrices"]
        parity = data.get("parity", data.get("num_bosons"))
    except (KeyError, TypeError) as exc:
        raise InputError(f"not a matrix payload ({exc})") from exc
    mats = [graph.SignedPermMatrix.from_dense(m) for m in rows]
    relations = graph.verify_clifford(mats)
    g = graph.from_matrices(mats, parity)
    back = [m.to_rows() for m in graph.to_matrices(g, order=range(g.num_vertices))]
    return {"relations_ok": relations, "valid": graph.validate(g).ok,
            "round_trip": back == [m.to_rows() for m in mats],
            "graph": g.to_dict()}


def cmd_recover_code(args):
    g = _load_graph(args.input)
    code = construct.recover_code(g, args.base)
    return {"n": g.n, "dimension": code.dimension,
            "code": [str(r) for r in code.rref],
            "doubly_even": f2code.is_doubly_even(code)}


def cmd_iso(args):
    g1, g2 = _load_graph(args.graphs[0]), _load_graph(args.graphs[1])
    w = graph.is_isomorphic(g1, g2)
    if w is None:
        return {"isomorphic": False}
    return {"isomorphic": True, "bijection": list(w.bijection), "switch": sorted(w.switch)}


def cmd_cohomology(args):
    g = _load_graph(args.input)
    cx = cohomology.build_complex(g)
    sol = cohomology.solve_totally_odd(cx)
    counted = cohomology.count_dashings(cx)
    out = {"counts": list(cx.counts),
           "dd_zero": [cohomology.compose_is_zero(cx, k) for k in (0, 1)],
           "cohomology": list(cohomology.cohomology_dims(cx)),
           "totally_odd_solvable": sol is not None,
           "bipartite": cohomology.solve_bipartition(cx) is not None}
    if counted is not None:
        out["dashings"], out["classes"] = counted
        out["solution"] = sol.to_hex()
    return out


def cmd_geometrize(args):
    g = _load_graph(args.input)
    if args.all_rainbows:
        seen, rows = set(), []
        for perm in itertools.permutations(range(1, g.n + 1)):
            r = geometry.Rainbow(perm)
            if r in seen:
                continue
            seen.add(r)
            rows.append({"rainbow": list(r.canonical()), **geometry.geometrize(g, r).to_dict()})
        return {"rainbows": rows}
    rainbow = geometry.Rainbow.parse(args.rainbow) if args.rainbow else geometry.Rainbow.standard(g.n)
    stats = geometry.geometrize(g, rainbow)
    return {"rainbow": list(rainbow.order), **stats.to_dict(with_faces=args.faces)}


def cmd_minrep(args):
    rep = construct.minimal_representation(args.n, args.signs)
    out = {"n": rep.n, "dimension": rep.dimension, "code": rep.code.name,
           "generators": [str(r) for r in rep.code.rows],
           "code_dimension": rep.code.dimension}
    if args.with_graph:
        out["graph"] = rep.graph.to_dict()
    if args.with_matrices:
        out["matrices"] = [m.to_rows() for m in rep.matrices]
    return out


def cmd_codes(args):
    n = args.n
    if args.enumerate:
        codes = f2code.enumerate_doubly_even(n, args.limit_n)
        best = max(c.dimension for c in codes)
        return {"n": n, "count": len(codes), "max_dimension": best,
                "codes": [[str(r) for r in c.rref] for c in codes]}
    dim, code = f2code.max_doubly_even_dimension(n, "constructive")
    return {"n": n, "max_dimension": dim, "code": code.name,
            "generators": [str(r) for r in code.rows]}


def cmd_export_dot(args):
    return graph.to_dot(_load_graph(args.input))


COMMANDS: Dict[str, Callable] = {
    "cube": cmd_cube, "quotient": cmd_quotient, "validate": cmd_validate,
    "switch": cmd_switch, "matrices": cmd_matrices, "from-matrices": cmd_from_matrices,
    "verify": cmd_verify, "recover-code": cmd_recover_code, "iso": cmd_iso,
    "cohomology": cmd_cohomology, "geometrize": cmd_geometrize, "minrep": cmd_minrep,
    "codes": cmd_codes, "export-dot": cmd_export_dot,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("json", "dot", "text"), default="json")
    common.add_argument("--seed", type=int, help="reserved; no command is randomized")

    inp = argparse.ArgumentParser(add_help=False)
    inp.add_argument("-i", "--input", help="input JSON file ('-' or omitted: stdin)")

    p = argparse.ArgumentParser(prog="cliffordinkra", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cube", parents=[common], help="n-cube graph")
    s.add_argument("n", type=int)

    s = sub.add_parser("quotient", parents=[common, inp], help="cube quotient by a doubly even code")
    s.add_argument("--n", type=int, help="build the spec inline instead of reading one")
    s.add_argument("--code", help="comma-separated generators or a name like d_4")
    s.add_argument("--signs", help="one +/- per generator")

    for name, hlp in (("validate", "check the graph rules"), ("matrices", "generator matrices")):
        s = sub.add_parser(name, parents=[common, inp], help=hlp)
        s.add_argument("--signature", help="p,q for Cl(p,q); default 0,n")

    s = sub.add_parser("switch", parents=[common, inp], help="vertex switch")
    s.add_argument("vertices", help="vertex indices, e.g. 0,3,5")

    sub.add_parser("from-matrices", parents=[common, inp], help="graph from a matrices payload")
    sub.add_parser("verify", parents=[common, inp], help="matrices -> graph -> matrices round trip")

    s = sub.add_parser("recover-code", parents=[common, inp], help="stabilizer code of a connected graph")
    s.add_argument("--base", type=int, default=0)

    s = sub.add_parser("iso", parents=[common], help="isomorphism up to vertex switching")
    s.add_argument("graphs", nargs=2)

    sub.add_parser("cohomology", parents=[common, inp], help="cubical cochain data")

    s = sub.add_parser("geometrize", parents=[common, inp], help="surface from a rainbow")
    s.add_argument("--rainbow", help="cyclic color order, e.g. '1 2 3 4' (default: standard)")
    s.add_argument("--all-rainbows", action="store_true")
    s.add_argument("--faces", action="store_true", help="list the glued faces")

    s = sub.add_parser("minrep", parents=[common], help="minimal graded representation")
    s.add_argument("n", type=int)
    s.add_argument("--signs")
    s.add_argument("--with-graph", action="store_true")
    s.add_argument("--with-matrices", action="store_true")

    s = sub.add_parser("codes", parents=[common], help="maximal doubly even codes")
    s.add_argument("n", type=int)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--enumerate", action="store_true", help="search every doubly even code")
    mode.add_argument("--max", action="store_true", help="constructive maximal code (default)")
    s.add_argument("--limit-n", type=int, default=f2code.DEFAULT_ENUMERATION_LIMIT,
                   help="largest n the exhaustive search will attempt")

    sub.add_parser("export-dot", parents=[common, inp], help="Graphviz drawing")
    return p


# -- output --------------------------------------------------------------------


def _as_text(payload) -> str:
    if isinstance(payload, dict) and "matrices" in payload:
        blocks = []
        for c, m in enumerate(payload["matrices"], 1):
            rows = "\n".join(" ".join(f"{x:2d}" for x in row) for row in m)
            blocks.append(f"G_{c} =\n{rows}")
        return "\n\n".join(blocks)
    if isinstance(payload, dict):
        return "\n".join(f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(payload.items()))
    return str(payload)


def render(payload, fmt: str) -> str:
    if isinstance(payload, str):
        return payload if payload.endswith("\n") else payload + "\n"
    if isinstance(payload, _Graph):
        if fmt == "dot":
            return graph.to_dot(payload.g)
        if payload.extra:
            payload = {**payload.extra, "graph": payload.g.to_dict()}
        else:
            return payload.g.to_json() + "\n"
    if fmt == "dot":
        raise ValueError("--format dot needs a command that produces a graph")
    if fmt == "text":
        return _as_text(payload) + "\n"
    return json.dumps(payload, sort_keys=True) + "\n"


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = render(COMMANDS[args.command](args), args.format)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError, IndexError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
