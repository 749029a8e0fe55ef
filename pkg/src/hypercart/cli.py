"""Command line interface.

Input files hold one hyperedge per line ("#" comments, blank lines
ignored); "-" reads standard input, and canonical JSON emitted by other
commands is accepted everywhere a file is, so commands compose in pipes.

Exit codes: 0 success, 1 negative isomorphism answer, 64 usage error,
65 unreadable or invalid input, 66 failed precondition (disconnected or
not conformal, named in the message), 67 limit exceeded, 70 internal
verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .coloring import (
    DEFAULT_EXACT_LIMIT,
    chromatic_index,
    chromatic_number,
    minimal_coloring,
)
from .core import (
    Graph,
    Hypergraph,
    canonical_json,
    from_structured,
    parse_hypergraph,
    serialize_hypergraph,
    stats,
    to_structured,
)
from .errors import (
    DisconnectedError,
    InternalInconsistencyError,
    LimitExceededError,
    NotConformalError,
    ParseError,
    ValidationError,
)
from .graphfactor import factor_graph
from .hyperfactor import factor_hypergraph
from .iso import are_isomorphic, l2_isomorphic, random_conformal_hypergraph
from .product import graph_product, hyper_product
from .sections import (
    DEFAULT_CLIQUE_LIMIT,
    is_conformal,
    l2_section,
    two_section,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(path: str, kind: str = "hypergraph") -> Hypergraph:
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON input: {exc}") from exc
        return from_structured(obj, kind)
    return parse_hypergraph(text, kind)


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    if args.format == "json":
        print(canonical_json(payload))
    else:
        sys.stdout.write(text)


def _hypergraph_output(args: argparse.Namespace, h: Hypergraph) -> None:
    _emit(args, to_structured(h), serialize_hypergraph(h, "text"))


def _kind(args: argparse.Namespace) -> str:
    return "graph" if getattr(args, "as_graph", False) else "hypergraph"


def _cmd_validate(args: argparse.Namespace) -> int:
    _hypergraph_output(args, _load(args.file, _kind(args)))
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    s = stats(_load(args.file))
    lines = [f"n {s['n']}", f"m {s['m']}", f"delta {s['delta']}", f"r {s['r']}"]
    lines += [f"degree {v} {d}" for v, d in s["degree"].items()]
    _emit(args, s, "".join(line + "\n" for line in lines))
    return 0


def _cmd_two_section(args: argparse.Namespace) -> int:
    _hypergraph_output(args, two_section(_load(args.file)))
    return 0


def _cmd_l2_section(args: argparse.Namespace) -> int:
    section = l2_section(_load(args.file))
    entries = [
        {"edge": list(pair), "labels": sorted(list(e) for e in labs)}
        for pair, labs in sorted(section.labels.items())
    ]
    text_lines = [
        " ".join(entry["edge"])
        + "".join(" | " + " ".join(lab) for lab in entry["labels"])
        for entry in entries
    ]
    _emit(args, {"edges": entries}, "".join(line + "\n" for line in text_lines))
    return 0


def _cmd_conformal(args: argparse.Namespace) -> int:
    report = is_conformal(_load(args.file), args.max_cliques)
    payload = {
        "conformal": report.conformal,
        "witness": list(report.witness) if report.witness else None,
    }
    text = f"conformal {'true' if report.conformal else 'false'}\n"
    if report.witness:
        text += "witness " + " ".join(report.witness) + "\n"
    _emit(args, payload, text)
    return 0


def _cmd_product(args: argparse.Namespace) -> int:
    kind = _kind(args)
    factors = [_load(path, kind) for path in args.files]
    prod = graph_product(factors) if kind == "graph" else hyper_product(factors)
    _hypergraph_output(args, prod)
    return 0


def _factor_text(factors: list[Hypergraph], head: str) -> str:
    out = head
    for i, f in enumerate(factors, start=1):
        out += f"# factor {i}\n" + serialize_hypergraph(f, "text")
    return out


def _cmd_factor(args: argparse.Namespace) -> int:
    if args.as_graph:
        g = _load(args.file, "graph")
        fact = factor_graph(Graph(g.hyperedges))
        payload = {
            "factors": [to_structured(f) for f in fact.factors],
            "coords": {v: list(c) for v, c in sorted(fact.coords.items())},
        }
        _emit(args, payload, _factor_text(fact.factors, ""))
        return 0
    fact = factor_hypergraph(_load(args.file), args.max_cliques)
    payload = {
        "prime": fact.prime,
        "factors": [to_structured(f) for f in fact.factors],
        "coords": {v: list(c) for v, c in sorted(fact.coords.items())},
    }
    head = f"# prime {'true' if fact.prime else 'false'}\n"
    _emit(args, payload, _factor_text(fact.factors, head))
    return 0


def _coloring_payload(k: int, assignment: dict[str, int]) -> dict[str, Any]:
    return {"k": k, "assignment": dict(sorted(assignment.items()))}


def _coloring_text(k: int, assignment: dict[str, int]) -> str:
    out = f"k {k}\n"
    for v, c in sorted(assignment.items()):
        out += f"{v} {c}\n"
    return out


def _cmd_color(args: argparse.Namespace) -> int:
    col = minimal_coloring(
        _load(args.file), args.max_exact_vertices, args.max_cliques
    )
    _emit(
        args,
        _coloring_payload(col.used_colors, col.assignment),
        _coloring_text(col.used_colors, col.assignment),
    )
    return 0


def _cmd_chromatic_number(args: argparse.Namespace) -> int:
    mode = "strong" if args.strong else "weak"
    k, col = chromatic_number(_load(args.file), mode, args.max_exact_vertices)
    _emit(
        args,
        _coloring_payload(k, col.assignment),
        _coloring_text(k, col.assignment),
    )
    return 0


def _cmd_chromatic_index(args: argparse.Namespace) -> int:
    k, col = chromatic_index(_load(args.file), args.max_exact_vertices)
    named = {" ".join(e): c for e, c in col.assignment.items()}
    _emit(args, _coloring_payload(k, named), _coloring_text(k, named))
    return 0


def _cmd_isomorphic(args: argparse.Namespace) -> int:
    a = _load(args.file_a)
    b = _load(args.file_b)
    if args.l2:
        witness = l2_isomorphic(l2_section(a), l2_section(b))
    else:
        witness = are_isomorphic(a, b)
    if witness is None:
        _emit(args, {"isomorphic": False, "witness": None}, "isomorphic false\n")
        print("not isomorphic", file=sys.stderr)
        return 1
    text = "isomorphic true\n"
    for u, v in sorted(witness.mapping.items()):
        text += f"{u} {v}\n"
    _emit(args, {"isomorphic": True, "witness": witness.mapping}, text)
    return 0


def _cmd_random(args: argparse.Namespace) -> int:
    if args.n < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return 64
    if not 0.0 <= args.p <= 1.0:
        print("error: --p must lie in [0, 1]", file=sys.stderr)
        return 64
    _hypergraph_output(args, random_conformal_hypergraph(args.n, args.p, args.seed))
    return 0


def build_parser() -> _Parser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="json")
    limits = _Parser(add_help=False)
    limits.add_argument(
        "--max-exact-vertices", type=int, default=DEFAULT_EXACT_LIMIT
    )
    limits.add_argument("--max-cliques", type=int, default=DEFAULT_CLIQUE_LIMIT)

    parser = _Parser(
        prog="hypercart",
        description=(
            "Cartesian products, sections, colorings, and prime"
            " factorization of hypergraphs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[fmt], help="parse and re-emit canonically")
    p.add_argument("file")
    p.add_argument("--as-graph", action="store_true")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("stats", parents=[fmt], help="n, m, max degree, rank, degrees")
    p.add_argument("file")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("two-section", parents=[fmt], help="co-membership graph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_two_section)

    p = sub.add_parser(
        "l2-section", parents=[fmt], help="2-section with hyperedge labels"
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_l2_section)

    p = sub.add_parser(
        "conformal", parents=[fmt, limits],
        help="are the maximal 2-section cliques exactly the hyperedges",
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_conformal)

    p = sub.add_parser("product", parents=[fmt], help="Cartesian product")
    p.add_argument("files", nargs="+")
    p.add_argument("--as-graph", action="store_true")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser(
        "factor", parents=[fmt, limits], help="prime factorization"
    )
    p.add_argument("file")
    p.add_argument("--as-graph", action="store_true")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser(
        "color", parents=[fmt, limits],
        help="optimal weak coloring via prime factorization",
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser(
        "chromatic-number", parents=[fmt, limits], help="exact chromatic number"
    )
    p.add_argument("file")
    p.add_argument("--strong", action="store_true")
    p.set_defaults(func=_cmd_chromatic_number)

    p = sub.add_parser(
        "chromatic-index", parents=[fmt, limits],
        help="exact hyperedge coloring number",
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_chromatic_index)

    p = sub.add_parser(
        "isomorphic", parents=[fmt], help="isomorphism test with witness"
    )
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--l2", action="store_true")
    p.set_defaults(func=_cmd_isomorphic)

    p = sub.add_parser(
        "random", parents=[fmt], help="random conformal hypergraph"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_random)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 65
    except (NotConformalError, DisconnectedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 66
    except LimitExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 67
    except InternalInconsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 70
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 65


def entrypoint() -> None:
    sys.exit(main())
