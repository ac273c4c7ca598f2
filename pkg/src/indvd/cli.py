"""Command-line interface.

Exit codes: 0 success, 1 check failed (non-VD, verification failure,
disagreeing counts, failed survey rows), 2 unreadable input, 3 size guard
breached, 4 input is not a forest.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complex import ComplexFormatError, dumps_complex, loads_complex
from .graph import GraphFormatError, is_forest, read_graph
from .oracle import (
    CertificateFormatError,
    NonVDWitness,
    dumps_certificate,
    loads_certificate,
    shelling_from_vd,
    vd_check,
    verify_certificate,
    witness_to_dict,
    with_facets,
)
from .rind import ind_complex
from .survey import GuardError, atomic_write, format_report, run_survey
from .topology import ComplexTooLarge, reduced_betti, sphere_counts
from .tree_vd import Trace, decompose, recursion_dot

EXIT_FAIL, EXIT_PARSE, EXIT_GUARD, EXIT_NOT_FOREST = 1, 2, 3, 4
DEFAULT_GRAPH_GUARD = 24


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        atomic_write(args.out, text)
    else:
        sys.stdout.write(text)


def _load_graph(path, guard: int):
    try:
        g = read_graph(path)
    except (OSError, GraphFormatError) as exc:
        raise CliError(EXIT_PARSE, f"cannot read graph {path}: {exc}")
    if g.vertex_count > guard:
        raise CliError(EXIT_GUARD, f"graph has {g.vertex_count} vertices, guard is {guard}")
    return g


def _load_text(path, loader, what):
    try:
        with open(path) as fh:
            return loader(fh.read())
    except (OSError, ComplexFormatError, CertificateFormatError) as exc:
        raise CliError(EXIT_PARSE, f"cannot read {what} {path}: {exc}")


def _forest(args):
    g = _load_graph(args.graph, args.guard)
    if not is_forest(g):
        raise CliError(EXIT_NOT_FOREST, "input graph is not a forest")
    return g


def cmd_build(args) -> int:
    g = _load_graph(args.graph, args.guard)
    _emit(args, dumps_complex(ind_complex(g, args.radius)))
    return 0


def cmd_decompose(args) -> int:
    g = _forest(args)
    trace = Trace()
    cert = decompose(g, args.radius, trace)
    if args.facets:
        cert = with_facets(cert, ind_complex(g, args.radius))
    if args.dot:
        atomic_write(args.dot, recursion_dot(trace))
    _emit(args, dumps_certificate(cert))
    return 0


def cmd_export_dot(args) -> int:
    g = _forest(args)
    trace = Trace()
    decompose(g, args.radius, trace)
    _emit(args, recursion_dot(trace))
    return 0


def cmd_check_vd(args) -> int:
    k = _load_text(args.complex, loads_complex, "complex")
    if len(k.vertices) > args.guard:
        raise CliError(EXIT_GUARD, f"complex has {len(k.vertices)} vertices, guard is {args.guard}")
    out = vd_check(k, memo=not args.no_memo)
    if isinstance(out, NonVDWitness):
        _emit(args, json.dumps(witness_to_dict(out), indent=1) + "\n")
        return EXIT_FAIL
    _emit(args, dumps_certificate(out))
    return 0


def cmd_verify(args) -> int:
    cert = _load_text(args.certificate, loads_certificate, "certificate")
    g = _load_graph(args.graph, args.guard)
    ok = verify_certificate(cert, ind_complex(g, args.radius))
    print("pass" if ok else "fail")
    return 0 if ok else EXIT_FAIL


def cmd_homology(args) -> int:
    k = _load_text(args.complex, loads_complex, "complex")
    try:
        b = reduced_betti(k, limit=args.max_faces)
    except ComplexTooLarge as exc:
        raise CliError(EXIT_GUARD, str(exc))
    _emit(args, json.dumps({"reduced_betti": {str(d): x for d, x in b.as_dict().items()}}) + "\n")
    return 0


def cmd_spheres(args) -> int:
    cert = _load_text(args.certificate, loads_certificate, "certificate")
    g = _load_graph(args.graph, args.guard)
    k = ind_complex(g, args.radius)
    if not verify_certificate(cert, k):
        print("certificate does not verify", file=sys.stderr)
        return EXIT_FAIL
    try:
        betti = reduced_betti(k, limit=args.max_faces).as_dict()
    except ComplexTooLarge as exc:
        raise CliError(EXIT_GUARD, str(exc))
    spheres = sphere_counts(k, shelling_from_vd(cert, k))
    doc = {
        "sphere_counts": {str(d): x for d, x in spheres.items()},
        "reduced_betti": {str(d): x for d, x in betti.items()},
        "agree": spheres == betti,
    }
    _emit(args, json.dumps(doc) + "\n")
    return 0 if spheres == betti else EXIT_FAIL


def _parse_range(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        lo, _, hi = part.partition("-")
        out.extend(range(int(lo), int(hi or lo) + 1))
    return out


def cmd_survey(args) -> int:
    r_values = None if args.r_range in (None, "all") else _parse_range(args.r_range)
    try:
        rows = run_survey(
            args.max_n,
            r_values,
            mode=args.mode,
            seed=args.seed,
            count=args.count,
            min_n=args.min_n,
            workers=args.workers,
            memo=not args.no_memo,
            guard=args.guard,
            oracle_max_n=args.oracle_max_n,
        )
    except GuardError as exc:
        raise CliError(EXIT_GUARD, str(exc))
    _emit(args, format_report(rows, timing=not args.no_timing))
    failed = [r for r in rows if not r.ok()]
    print(f"{len(rows)} rows, {len(failed)} failed", file=sys.stderr)
    return EXIT_FAIL if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="indvd", description="r-independence complexes of graphs and their vertex decompositions")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help, radius=True):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--graph", required=True)
        if radius:
            sp.add_argument("--radius", "-r", type=int, required=True)
        sp.add_argument("--out")
        sp.add_argument("--guard", type=int, default=DEFAULT_GRAPH_GUARD, help="maximum vertex count")
        sp.set_defaults(func=func)
        return sp

    graph_cmd("build", cmd_build, "write Ind_r(G) as a complex document")
    sp = graph_cmd("decompose", cmd_decompose, "certificate of vertex decomposability for a forest")
    sp.add_argument("--dot", help="also write the recursion tree in Graphviz format")
    sp.add_argument("--facets", action="store_true", help="record facets at every certificate node")
    graph_cmd("export-dot", cmd_export_dot, "recursion tree of the decomposition in Graphviz format")

    sp = graph_cmd("verify", cmd_verify, "check a certificate against Ind_r(G)")
    sp.add_argument("--certificate", required=True)
    sp = graph_cmd("spheres", cmd_spheres, "sphere counts from the certificate's shelling vs Betti numbers")
    sp.add_argument("--certificate", required=True)
    sp.add_argument("--max-faces", type=int, default=1 << 16)

    sp = sub.add_parser("check-vd", help="brute-force vertex decomposability of a complex document")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--out")
    sp.add_argument("--guard", type=int, default=DEFAULT_GRAPH_GUARD)
    sp.add_argument("--no-memo", action="store_true")
    sp.set_defaults(func=cmd_check_vd)

    sp = sub.add_parser("homology", help="reduced GF(2) Betti numbers of a complex document")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--out")
    sp.add_argument("--max-faces", type=int, default=1 << 16)
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("survey", help="validate all (or random) trees up to a size")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--min-n", type=int, default=1)
    sp.add_argument("--r-range", default="all", help="e.g. '1-3' or '1,2,4'; 'all' means 1..n")
    sp.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=100, help="number of random trees")
    sp.add_argument("--guard", type=int, help="maximum n (default 8 exhaustive, 14 random)")
    sp.add_argument("--oracle-max-n", type=int, default=10, help="skip the brute-force VD oracle above this n")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--no-memo", action="store_true")
    sp.add_argument("--no-timing", action="store_true", help="write 0 in the ms column")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_survey)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
