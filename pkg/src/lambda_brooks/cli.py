"""Command-line front door.

Inputs are DIMACS .col or JSON graph files (auto-detected by extension,
overridable with --format; "-" reads stdin and then requires --format).
All JSON output is canonical: sorted keys, normalized edge order, one
trailing newline.

Exit codes: 0 success (coloring found / certificate valid / member
recognized), 3 the "chromatic number is k+1" outcome (certificate witness,
non-member, invalid certificate), 1 usage or input errors, 4 internal
inconsistency. 2 is left to the argument parser per shell conventions.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .coloring import (
    color_or_find_hk_block,
    exact_chromatic,
    exact_k_colorable,
    is_critical,
    is_gallai_forest,
    is_proper,
    low_high_split,
    resolve_oracle_limit,
)
from .connectivity import (
    block_decomposition,
    connected_components,
    lambda_max,
    local_edge_connectivity,
)
from .errors import (
    InternalInconsistencyError,
    ParseError,
    ResourceLimitError,
    UsageError,
)
from .generate import GeneratorSpec, generate
from .graph import Graph, coloring_number, degree_extremes, induced_subgraph
from .hajos import (
    certificate_from_json_obj,
    certificate_to_json_obj,
    gen_hk_random,
    recognize_hk,
    verify_certificate,
)
from .io import canonical_json, graph_to_json_obj, parse_graph_text, write_dimacs

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CERTIFICATE = 3
EXIT_INCONSISTENT = 4


def _read_graph(args) -> Graph:
    if args.input == "-":
        if not args.format:
            raise UsageError("reading stdin requires --format")
        return parse_graph_text(sys.stdin.read(), args.format)
    from .io import load_graph

    return load_graph(args.input, args.format)


def _emit(obj) -> None:
    sys.stdout.write(canonical_json(obj))


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="graph file (.col DIMACS or .json), or - for stdin")
    p.add_argument(
        "--format", choices=("dimacs", "json"), default=None, help="override format detection"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambda-brooks",
        description="Local edge connectivity, Hajos-class recognition, and "
        "k-coloring decisions for simple graphs.",
        epilog="Exit codes: 0 ok, 3 certificate outcome (chi = k+1, "
        "non-member, or invalid certificate), 1 usage error, 4 internal "
        "inconsistency. The exact-oracle vertex cap honors "
        "LAMBDA_BROOKS_ORACLE_LIMIT.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="n, m, degree extremes, col, lambda, block count")
    _add_input(p)
    p.add_argument("--json", action="store_true", help="JSON instead of aligned text")

    p = sub.add_parser("lambda", help="maximum local edge connectivity")
    _add_input(p)
    p.add_argument(
        "--pair",
        nargs=2,
        type=int,
        metavar=("U", "V"),
        help="report lambda(u, v) with a minimum cut instead of the maximum",
    )

    p = sub.add_parser("blocks", help="block decomposition as JSON")
    _add_input(p)

    p = sub.add_parser("chi", help="exact chromatic number (oracle)")
    _add_input(p)
    p.add_argument("--limit", type=int, default=None, help="override the oracle vertex cap")

    p = sub.add_parser("color", help="k-color or exhibit a certified block (chi = k+1)")
    _add_input(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help="oracle cap for the k <= 3 fallback")

    p = sub.add_parser("recognize", help="membership in the k-th Hajos-closed class")
    _add_input(p)
    p.add_argument("-k", type=int, required=True)

    p = sub.add_parser("verify", help="replay a certificate against a graph")
    _add_input(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--cert", required=True, help="certificate JSON file")

    p = sub.add_parser("gen", help="emit a generated graph as canonical JSON")
    p.add_argument(
        "--kind",
        required=True,
        choices=("complete", "cycle", "wheel", "gnp", "hajos-tower", "hosted"),
    )
    p.add_argument("--n", type=int)
    p.add_argument("--rim", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("-k", type=int)
    p.add_argument("--joins", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--core-kind", dest="core_kind")
    p.add_argument("--core-n", dest="core_n", type=int)
    p.add_argument("--core-rim", dest="core_rim", type=int)
    p.add_argument("--core-k", dest="core_k", type=int)
    p.add_argument("--core-joins", dest="core_joins", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dimacs", action="store_true", help="emit DIMACS instead of JSON")
    p.add_argument(
        "--cert-out", help="for hajos-tower: write the membership certificate here"
    )

    p = sub.add_parser("audit", help="run the invariant suite over a directory of graphs")
    p.add_argument("directory")
    p.add_argument("--limit", type=int, default=None, help="oracle cap for chi checks")

    return parser


def cmd_stats(args) -> int:
    g = _read_graph(args)
    delta, big_delta = degree_extremes(g)
    col, _ = coloring_number(g)
    lam, _ = lambda_max(g)
    blocks = len(block_decomposition(g).blocks)
    stats = {
        "n": g.n,
        "m": g.m,
        "min_degree": delta,
        "max_degree": big_delta,
        "col": col,
        "lambda": lam,
        "blocks": blocks,
    }
    if args.json:
        _emit(stats)
    else:
        width = max(len(k) for k in stats)
        for key, value in stats.items():
            sys.stdout.write(f"{key:<{width}}  {value}\n")
    return EXIT_OK


def cmd_lambda(args) -> int:
    g = _read_graph(args)
    if args.pair:
        u, v = args.pair
        value, cut = local_edge_connectivity(g, u, v)
        _emit({"pair": [u, v], "lambda": value, "cut": cut.to_json_obj()})
    else:
        value, witness = lambda_max(g)
        _emit({"lambda": value, "witness": list(witness) if witness else None})
    return EXIT_OK


def cmd_blocks(args) -> int:
    g = _read_graph(args)
    _emit(block_decomposition(g).to_json_obj())
    return EXIT_OK


def cmd_chi(args) -> int:
    g = _read_graph(args)
    chi, witness = exact_chromatic(g, args.limit)
    _emit({"chi": chi, "witness": witness.to_json_obj()})
    return EXIT_OK


def cmd_color(args) -> int:
    g = _read_graph(args)
    witness = color_or_find_hk_block(g, args.k, args.limit)
    _emit(witness.to_json_obj())
    return EXIT_OK if witness.is_coloring else EXIT_CERTIFICATE


def cmd_recognize(args) -> int:
    g = _read_graph(args)
    cert = recognize_hk(g, args.k)
    if cert is None:
        _emit({"member": False})
        return EXIT_CERTIFICATE
    _emit({"member": True, "certificate": certificate_to_json_obj(cert)})
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args)
    with open(args.cert, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    if isinstance(obj, dict) and "certificate" in obj:
        obj = obj["certificate"]  # accept the output of `recognize` / `color`
    cert = certificate_from_json_obj(obj)
    check = verify_certificate(g, args.k, cert)
    _emit({"valid": check.ok, "reason": check.reason})
    return EXIT_OK if check.ok else EXIT_CERTIFICATE


def cmd_gen(args) -> int:
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.rim is not None:
        params["rim"] = args.rim
    if args.p is not None:
        params["p"] = args.p
    if args.k is not None:
        params["k"] = args.k
    if args.joins is not None:
        params["joins"] = args.joins
    if args.kind == "hosted":
        core = {}
        if args.core_kind:
            core["kind"] = args.core_kind
        if args.core_n is not None:
            core["n"] = args.core_n
        if args.core_rim is not None:
            core["rim"] = args.core_rim
        if args.core_k is not None:
            core["k"] = args.core_k
        if args.core_joins is not None:
            core["joins"] = args.core_joins
        params["core"] = core
        params["budget"] = args.budget if args.budget is not None else 0
    spec = GeneratorSpec(args.kind, params, args.seed)
    if args.kind == "hajos-tower" and args.cert_out:
        g, cert = gen_hk_random(params["k"], params.get("joins", 0), args.seed)
        with open(args.cert_out, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(certificate_to_json_obj(cert)))
    else:
        g = generate(spec)
    sys.stdout.write(write_dimacs(g) if args.dimacs else canonical_json(graph_to_json_obj(g)))
    return EXIT_OK


def _audit_one(path: str, limit: int | None) -> list[str]:
    """Invariant checks for one graph file; returns human-readable failures."""
    from .io import load_graph

    failures = []
    g = load_graph(path)
    g.validate()
    cap = resolve_oracle_limit(limit)
    col, order = coloring_number(g)
    lam, _ = lambda_max(g)
    _, big_delta = degree_extremes(g)
    if not col <= lam + 1 <= big_delta + 1 and g.n > 0:
        failures.append(f"chain violated: col={col} lambda={lam} Delta={big_delta}")
    if g.n == 0 or g.n > cap:
        return failures
    chi, witness = exact_chromatic(g, cap)
    if not is_proper(g, witness):
        failures.append("oracle witness not proper")
    if chi > col:
        failures.append(f"chain violated: chi={chi} col={col}")
    if is_critical(g, cap) and chi >= 2:
        k = chi - 1
        split = low_high_split(g, k)
        if split.below:
            failures.append(f"critical graph has vertices of degree < {k}: {split.below}")
        if len(block_decomposition(g).cut_vertices) > 0:
            failures.append("critical graph has a cut vertex")
        if not is_gallai_forest(split.low):
            failures.append("low-vertex subgraph is not a Gallai forest")
    return failures


def cmd_audit(args) -> int:
    paths = sorted(
        os.path.join(args.directory, name)
        for name in os.listdir(args.directory)
        if name.endswith((".col", ".json", ".dimacs"))
    )
    if not paths:
        raise UsageError(f"no graph files in {args.directory!r}")
    total_failures = 0
    for path in paths:
        buffered = []
        try:
            problems = _audit_one(path, args.limit)
        except (ParseError, UsageError, ResourceLimitError) as exc:
            problems = [f"unreadable: {exc}"]
        status = "ok" if not problems else "FAIL"
        buffered.append(f"{status:4}  {path}")
        buffered.extend(f"      {p}" for p in problems)
        sys.stdout.write("\n".join(buffered) + "\n")
        total_failures += len(problems)
    sys.stdout.write(f"audited {len(paths)} files, {total_failures} failures\n")
    return EXIT_OK if total_failures == 0 else EXIT_ERROR


COMMANDS = {
    "stats": cmd_stats,
    "lambda": cmd_lambda,
    "blocks": cmd_blocks,
    "chi": cmd_chi,
    "color": cmd_color,
    "recognize": cmd_recognize,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "audit": cmd_audit,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParseError, ResourceLimitError, OSError) as exc:
        print(f"lambda-brooks: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except InternalInconsistencyError as exc:
        print(f"lambda-brooks: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
