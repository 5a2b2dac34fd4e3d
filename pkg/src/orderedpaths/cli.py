"""Command-line driver: ``orderedpaths <command> ...``.

Exit codes: 0 success / path found, 1 not found (best effort) or invalid
certificate, 2 usage or input error, 3 node budget exhausted, 4 internal
invariant violation.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import io
from ._accel import backend_name
from .core import Family, OrderedColoring, PathCertificate, PathSpec, is_valid_certificate, reverse
from .errors import (EncodingBug, IncompleteModel, InvalidSpec, InvariantViolation, OrderedPathsError,
                     ResourceLimit)
from .ramsey import find_mono_ap, find_mono_other, ramsey_upper_bound_ap, ramsey_upper_bound_other
from .search import compute_ramsey_exact, search_bipartite_turan_max, search_ramsey_witness, search_turan_max
from .turan import (bipartite_turan_number, extremal_band, extremal_bipartite, extremal_star, find_ap_in_dense,
                    find_path_bipartite, turan_log_bound, turan_number_ap)
from .cnf import decode_cnf_model, encode_cnf

EXIT_OK, EXIT_NOT_FOUND, EXIT_USAGE, EXIT_RESOURCE, EXIT_INVARIANT = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _family(text: str) -> Family:
    try:
        return Family.parse(text)
    except InvalidSpec as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _out(text: str, path: str | None) -> None:
    if path:
        io.write_text(path, text)
    else:
        sys.stdout.write(text)


# --- bound ----------------------------------------------------------------------

def cmd_bound(args) -> int:
    fam, n, N = args.family, args.n, args.N
    if args.kind == "ramsey":
        if fam in (Family.AP, Family.PGL):
            value = ramsey_upper_bound_ap(n)
            how = f"2n-2+floor((sqrt(2(n-2)^2+(-1)^n)-1)/2) at n={n}"
        elif fam in (Family.PLL, Family.PGG):
            value = ramsey_upper_bound_other(n)
            how = f"3n-4 at n={n}"
        else:
            raise InvalidSpec(f"no Ramsey bound for {fam.value}")
        print(value)
        print(f"R_<({PathSpec(fam, n)}) <= {how}")
        return EXIT_OK
    if N is None:
        raise InvalidSpec(f"bound {args.kind} needs --N")
    if args.kind == "turan":
        if fam in (Family.AP, Family.PGL):
            value = turan_number_ap(N, n)
            how = f"= C(n-1,2)+(n-2)(N-n+1) at N={N}, n={n}"
        elif fam in (Family.PLL, Family.PGG):
            value = turan_log_bound(N, n)
            t = (N // n).bit_length()
            how = f"<= 2^(t-1) n^2 (t+1) with t={t}, at N={N}, n={n}"
        else:
            raise InvalidSpec(f"no Turán formula for {fam.value}")
        print(value)
        print(f"ex_<({N}, {PathSpec(fam, n)}) {how}")
        return EXIT_OK
    value = bipartite_turan_number(N, n)
    print(value)
    print(f"ex_<({N // 2}, {N // 2}, {PathSpec(fam, n)}) = (n/2-1)(N-n/2+1) at N={N}, n={n}")
    return EXIT_OK


# --- find -----------------------------------------------------------------------

def _run_finder(host, fam: Family, n: int, best_effort: bool, bipartite: bool = False):
    if isinstance(host, OrderedColoring):
        if fam is Family.AP:
            return find_mono_ap(host, n, best_effort=best_effort)
        if fam in (Family.PLL, Family.PGG):
            return find_mono_other(host, fam, n, best_effort=best_effort)
        if fam is Family.PGL:
            cert, trace = find_mono_ap(reverse(host), n, best_effort=best_effort)
            return _unreverse(cert, host.n_vertices, fam), trace
        raise InvalidSpec(f"no coloring finder for {fam.value}")
    if fam in (Family.PLL, Family.PGG) or (bipartite and fam in (Family.AP, Family.PGL)):
        return find_path_bipartite(host, fam, n, best_effort=best_effort)
    if fam is Family.AP:
        return find_ap_in_dense(host, n, best_effort=best_effort)
    if fam is Family.PGL:
        cert, trace = find_ap_in_dense(reverse(host), n, best_effort=best_effort)
        return _unreverse(cert, host.n_vertices, fam), trace
    raise InvalidSpec(f"{fam.value} paths are only found in bipartite hosts split at N/2")


def _unreverse(cert: PathCertificate | None, N: int, fam: Family) -> PathCertificate | None:
    if cert is None:
        return None
    verts = tuple(N + 1 - v for v in reversed(cert.vertices))
    return PathCertificate(PathSpec(fam, cert.spec.n), verts, cert.color)


def cmd_find(args) -> int:
    host = io.parse_host(io.read_text(args.host))
    cert, trace = _run_finder(host, args.family, args.n, args.best_effort, args.bipartite)
    if args.trace:
        io.write_text(args.trace, io.format_trace(trace))
    if args.render:
        sys.stdout.write(io.render_matrix(host, trace))
    if cert is None:
        print(f"no {PathSpec(args.family, args.n)} found ({len(trace.survivors)} surviving edges)")
        return EXIT_NOT_FOUND
    text = io.format_certificate(cert, host.n_vertices)
    _out(text, args.out)
    if args.out:
        print(f"{cert.spec} found: {' '.join(map(str, cert.vertices))}")
    return EXIT_OK


# --- construct ------------------------------------------------------------------

def cmd_construct(args) -> int:
    if args.kind == "extremal-star":
        g = extremal_star(args.N, args.n)
    elif args.kind == "extremal-band":
        g = extremal_band(args.N, args.n)
    else:
        g = extremal_bipartite(args.N, args.n, args.family)
    print(g.edge_count)
    if args.out:
        io.write_text(args.out, io.format_graph(g, args.format))
    else:
        sys.stdout.write(io.format_graph(g, args.format))
    return EXIT_OK


# --- search ---------------------------------------------------------------------

def cmd_search(args) -> int:
    spec = PathSpec(args.family, args.n)
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    if args.mode == "ramsey":
        if args.N is not None:
            res = search_ramsey_witness(spec, args.N, budget=args.budget, threads=args.threads)
            print(res.outcome.value)
            print(res.summary())
            if res.found and out_dir:
                io.write_text(out_dir / f"witness_{spec}_{args.N}.txt", io.format_coloring(res.witness, args.format))
            return EXIT_OK
        val = compute_ramsey_exact(spec, args.N_lo, args.N_hi, budget=args.budget, threads=args.threads)
        print(val.value)
        for probe in val.probes:
            print(probe.summary())
        if out_dir and val.witness is not None and val.witness.witness is not None:
            io.write_text(out_dir / f"witness_{spec}_{val.value - 1}.txt",
                          io.format_coloring(val.witness.witness, args.format))
        return EXIT_OK
    if args.N is None:
        raise InvalidSpec(f"search {args.mode} needs --N")
    if args.mode == "turan":
        res = search_turan_max(spec, args.N, budget=args.budget)
    else:
        res = search_bipartite_turan_max(args.N, args.n, args.family)
    print(res.max_edges)
    print(res.summary())
    if out_dir:
        io.write_text(out_dir / f"extremal_{spec}_{args.N}.txt", io.format_graph(res.witness, args.format))
    return EXIT_OK


# --- CNF ------------------------------------------------------------------------

def cmd_encode(args) -> int:
    cnf = encode_cnf(PathSpec(args.family, args.n), args.N)
    _out(cnf.to_dimacs(), args.out)
    if args.out:
        print(cnf.header())
    return EXIT_OK


def cmd_decode(args) -> int:
    text = sys.stdin.read() if args.model == "-" else io.read_text(args.model)
    c = decode_cnf_model(PathSpec(args.family, args.n), args.N, text, check=not args.no_check)
    _out(io.format_coloring(c, args.format), args.out)
    return EXIT_OK


# --- verify / render / random ---------------------------------------------------

def cmd_verify(args) -> int:
    cert, N = io.parse_certificate(io.read_text(args.certificate))
    host = io.parse_host(io.read_text(args.host))
    if host.n_vertices != N:
        print(f"certificate refers to N={N}, host has {host.n_vertices} vertices")
        return EXIT_NOT_FOUND
    if isinstance(host, OrderedColoring) and cert.color is None:
        print("certificate for a coloring must name a color")
        return EXIT_NOT_FOUND
    if is_valid_certificate(cert, host):
        print(f"valid {cert.spec} certificate")
        return EXIT_OK
    print(f"invalid {cert.spec} certificate")
    return EXIT_NOT_FOUND


def cmd_render(args) -> int:
    host = io.parse_host(io.read_text(args.host))
    trace = None
    if args.family is not None:
        if args.n is None:
            raise InvalidSpec("render with --family needs --n")
        _, trace = _run_finder(host, args.family, args.n, best_effort=True)
    sys.stdout.write(io.render_matrix(host, trace))
    return EXIT_OK


def cmd_random(args) -> int:
    rng = np.random.default_rng(args.seed)
    c = OrderedColoring.random(args.N, rng, args.p_red)
    _out(io.format_coloring(c, args.format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orderedpaths", description="Ordered Ramsey and Turán numbers of alternating paths.")
    p.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({backend_name()} kernels)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fam_n(sp, family_required=True):
        sp.add_argument("--family", type=_family, required=family_required, help="ap, pll, pgg, pgl or mp")
        sp.add_argument("--n", type=int, required=family_required, help="number of path vertices")

    def fmt(sp):
        sp.add_argument("--format", choices=io.FORMATS, default="matrix")

    sp = sub.add_parser("bound", help="evaluate a closed-form bound")
    sp.add_argument("kind", choices=("ramsey", "turan", "bipartite"))
    fam_n(sp)
    sp.add_argument("--N", type=int)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("find", help="run a deletion finder on a coloring or graph file")
    sp.add_argument("host")
    fam_n(sp)
    sp.add_argument("--best-effort", action="store_true", help="allow hosts below the guarantee")
    sp.add_argument("--bipartite", action="store_true",
                    help="treat a graph host as bipartite between [1, N/2] and [N/2+1, N] (ap, pgl)")
    sp.add_argument("--out", help="certificate file (default: stdout)")
    sp.add_argument("--trace", help="write the deletion trace here")
    sp.add_argument("--render", action="store_true", help="print the annotated matrix")
    sp.set_defaults(func=cmd_find)

    sp = sub.add_parser("construct", help="write an extremal construction")
    sp.add_argument("kind", choices=("extremal-star", "extremal-band", "extremal-bipartite"))
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--family", type=_family, default=Family.AP)
    sp.add_argument("--out")
    fmt(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("search", help="exhaustive Ramsey or Turán search")
    sp.add_argument("mode", choices=("ramsey", "turan", "bipartite"))
    fam_n(sp)
    sp.add_argument("--N", type=int, help="probe one host size (ramsey) or the host size (turan)")
    sp.add_argument("--N-lo", dest="N_lo", type=int)
    sp.add_argument("--N-hi", dest="N_hi", type=int)
    sp.add_argument("--budget", type=int, help="node budget (default: $ORDEREDPATHS_NODE_BUDGET or 1e9)")
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--out-dir")
    fmt(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("encode", help="write the DIMACS CNF for a Ramsey instance")
    fam_n(sp)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("decode", help="turn a SAT model into a coloring file")
    sp.add_argument("model", help="model file, or - for stdin")
    fam_n(sp)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--out")
    sp.add_argument("--no-check", action="store_true", help="skip the monochromatic-copy check")
    fmt(sp)
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("verify", help="check a certificate against its host")
    sp.add_argument("certificate")
    sp.add_argument("host")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("render", help="print a host as an upper-triangular grid")
    sp.add_argument("host")
    fam_n(sp, family_required=False)
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("random", help="write a seeded random coloring")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--p-red", dest="p_red", type=float, default=0.5)
    sp.add_argument("--out")
    fmt(sp)
    sp.set_defaults(func=cmd_random)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc} ({exc.nodes} nodes)", file=sys.stderr)
        return EXIT_RESOURCE
    except (InvariantViolation, EncodingBug) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (OrderedPathsError, IncompleteModel, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
