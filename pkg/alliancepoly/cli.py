"""Command-line interface for alliancepoly."""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from ._version import __version__
from .characterize import identify_families, verify_characterization
from .closed_forms import closed_form, expanded_text
from .compare import (
    DEFAULT_ISO_LIMIT,
    SCAN_KEYS,
    compare_graphs,
    compare_polynomials,
    scan_corpus,
)
from .corpus import open_corpus, random_corpus, read_edge_list_file, write_graph6
from .derived import (
    alliance_polynomial,
    defensive_alliance_cardinality_polynomial,
    induced_connected_subgraph_polynomial,
    strong_alliance_polynomial,
)
from .enumeration import EnumConfig, compute_da, naive_defensive_alliance_polynomial
from .errors import (
    AlliancePolyError,
    DomainError,
    GraphFormatError,
    InvariantError,
    PolyFormatError,
)
from .families import ErrataMode, FamilySpec, family_tags, make_family
from .graph import Graph, parse_graph6
from .named import named_graph
from .poly import BiPoly, load_poly_document, to_json
from .properties import order_of, profile

logger = logging.getLogger(__name__)

# Orders above this make the brute-force cross-check of ``poly --check`` impractical.
CHECK_MAX_ORDER = 20

INPUT_KINDS = ("family", "named", "edges", "g6", "poly")


class AppendInput(argparse.Action):
    """Collect every input flag into one ordered list of ``(kind, value)`` pairs."""

    def __call__(self, parser, namespace, values, option_string=None):
        inputs = list(getattr(namespace, "inputs", None) or [])
        inputs.append((self.dest, values))
        namespace.inputs = inputs


@dataclass
class Input:
    """One resolved input: a graph, or a polynomial loaded from JSON."""

    label: str
    graph: Graph | None = None
    da: BiPoly | None = None
    order: int | None = None


def _load_input(kind: str, value: str) -> Input:
    try:
        if kind == "family":
            return Input(value, graph=make_family(FamilySpec.parse(value)))
        if kind == "named":
            g = named_graph(value)
            return Input(g.label or value, graph=g)
        if kind == "edges":
            return Input(value, graph=read_edge_list_file(value))
        if kind == "g6":
            return Input(value, graph=parse_graph6(value, label=value))
        da, n = load_poly_document(Path(value).read_text(encoding="utf-8"))
        return Input(value, da=da, order=n if n is not None else order_of(da))
    except OSError as e:
        error_cls = PolyFormatError if kind == "poly" else GraphFormatError
        raise error_cls(f"cannot read {value}: {e.strerror or e}") from e


def _resolve_inputs(args: argparse.Namespace, count: int) -> list[Input]:
    inputs = getattr(args, "inputs", None) or []
    if len(inputs) != count:
        flags = ", ".join(f"--{kind}" for kind in INPUT_KINDS)
        raise GraphFormatError(f"expected exactly {count} input(s) from {flags}, got {len(inputs)}")
    return [_load_input(kind, value) for kind, value in inputs]


def _enum_config(args: argparse.Namespace) -> EnumConfig:
    return EnumConfig.from_env(
        max_subgraphs=getattr(args, "guard", None),
        parallel=getattr(args, "parallel", False) or None,
        workers=getattr(args, "workers", None),
        debug_check=getattr(args, "check", False) or None,
    )


def _da_of(item: Input, cfg: EnumConfig) -> tuple[BiPoly, int]:
    if item.da is not None:
        return item.da, item.order or order_of(item.da)
    result = compute_da(item.graph, cfg)
    logger.info(
        "%s: %d connected subsets in %.3fs", item.label, result.visited, result.elapsed
    )
    return result.poly, item.graph.n


def _emit(args: argparse.Namespace, text: str, document: Any) -> None:
    if args.format == "json":
        print(json.dumps(document, ensure_ascii=False, indent=2))
    else:
        print(text)


def _progress(args: argparse.Namespace) -> bool:
    return sys.stderr.isatty() and not args.quiet


def run_poly(args: argparse.Namespace) -> None:
    """Compute da or one of its derived polynomials."""
    cfg = _enum_config(args)
    (item,) = _resolve_inputs(args, 1)
    da, n = _da_of(item, cfg)
    if args.check:
        if item.graph is None:
            raise DomainError("--check needs a graph input")
        if n > CHECK_MAX_ORDER:
            raise DomainError(f"--check is limited to order {CHECK_MAX_ORDER}, got {n}")
        if naive_defensive_alliance_polynomial(item.graph) != da:
            raise InvariantError(f"enumeration of {item.label} disagrees with brute force")
        logger.info("%s: brute-force check passed", item.label)

    if args.which == "da":
        if args.format == "json":
            print(to_json(da, n))
        else:
            print(da)
        return
    if args.which == "A":
        result = alliance_polynomial(da)
    elif args.which == "q":
        result = induced_connected_subgraph_polynomial(da)
    elif args.which == "a":
        result = strong_alliance_polynomial(da, n)
    else:
        if args.k is None:
            raise DomainError("--which k needs --k")
        result = defensive_alliance_cardinality_polynomial(da, n, args.k)
    _emit(args, str(result), {"n": n, **result.to_dict()})


def run_props(args: argparse.Namespace) -> None:
    """Extract graph invariants from da."""
    (item,) = _resolve_inputs(args, 1)
    da, _ = _da_of(item, _enum_config(args))
    result = profile(da)
    _emit(args, result.to_text(), result.to_dict())


def run_identify(args: argparse.Namespace) -> None:
    """List the families whose polynomial equals the input's."""
    cfg = _enum_config(args)
    (item,) = _resolve_inputs(args, 1)
    da, _ = _da_of(item, cfg)
    found = identify_families(da, cfg)
    text = "\n".join(f"{m.spec}  ({m.evidence.value})" for m in found) or "no family matches"
    _emit(args, text, {"matches": [m.to_dict() for m in found]})


def run_compare(args: argparse.Namespace) -> None:
    """Compare two inputs polynomial by polynomial."""
    cfg = _enum_config(args)
    left, right = _resolve_inputs(args, 2)
    if left.graph is not None and right.graph is not None:
        report = compare_graphs(
            left.graph.with_label(left.label),
            right.graph.with_label(right.label),
            cfg,
            args.iso_limit,
        )
    else:
        da_g, n_g = _da_of(left, cfg)
        da_h, n_h = _da_of(right, cfg)
        report = compare_polynomials(da_g, n_g, da_h, n_h, left=left.label, right=right.label)
    _emit(args, report.to_text(), report.to_dict())


def run_scan(args: argparse.Namespace) -> None:
    """Bucket a corpus by a polynomial and report pairs da separates."""
    report = scan_corpus(
        open_corpus(args.corpus),
        key=args.key,
        cfg=_enum_config(args),
        iso_limit=args.iso_limit,
        progress=_progress(args),
    )
    _emit(args, report.to_text(), report.to_dict())


def run_family(args: argparse.Namespace) -> None:
    """Print a family's closed form without enumerating."""
    spec = FamilySpec.parse(args.spec)
    mode = ErrataMode(args.errata)
    fp = closed_form(spec, mode)
    if fp.erratum:
        logger.warning("%s printed as published; it disagrees with a direct count", spec)
    _emit(args, expanded_text(spec, mode), fp.to_dict())


def run_verify(args: argparse.Namespace) -> None:
    """Check that only copies of a family instance share its polynomial in a corpus."""
    report = verify_characterization(
        FamilySpec.parse(args.spec),
        open_corpus(args.corpus),
        cfg=_enum_config(args),
        iso_limit=args.iso_limit,
        progress=_progress(args),
    )
    _emit(args, report.to_text(), report.to_dict())


def run_corpus(args: argparse.Namespace) -> None:
    """Write a generated corpus as graph6 lines."""
    if args.random is not None:
        if args.order is None:
            raise GraphFormatError("--random needs --order")
        entries = random_corpus(args.random, args.order, args.p, args.seed)
    elif args.source is not None:
        entries = open_corpus(args.source)
    else:
        raise GraphFormatError("give a corpus source or --random COUNT")
    graphs = (entry.graph for entry in entries if entry.graph is not None)
    if args.output:
        output = Path(args.output)
        output.parent.mkdir(parents=True, exist_ok=True)
        with open(output, "w", encoding="ascii") as f:
            count = write_graph6(graphs, f)
        logger.info("Wrote %d graphs to %s", count, output)
    else:
        write_graph6(graphs, sys.stdout)


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("inputs")
    group.add_argument(
        "--family",
        action=AppendInput,
        metavar="SPEC",
        help=f"Family instance, e.g. wheel:5 ({', '.join(family_tags())}, named:1..4)",
    )
    group.add_argument("--named", action=AppendInput, metavar="NAME", help="G1, G2, G3 or G4")
    group.add_argument("--edges", action=AppendInput, metavar="FILE", help="Edge-list file")
    group.add_argument("--g6", action=AppendInput, metavar="LINE", help="graph6 string")
    group.add_argument(
        "--poly", action=AppendInput, metavar="FILE", help="Polynomial JSON document"
    )


def _add_enum_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--guard",
        type=int,
        default=None,
        help="Maximum connected subsets to visit per graph "
        "(default: $ALLIANCEPOLY_GUARD or 50000000)",
    )
    parser.add_argument(
        "--parallel",
        action="store_true",
        help="Enumerate in worker processes",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker processes for --parallel (default: one per CPU)",
    )


def _add_format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        type=str,
        choices=["text", "json"],
        default="text",
        help="Output format (default: text)",
    )


def _add_iso_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--iso-limit",
        type=int,
        default=DEFAULT_ISO_LIMIT,
        help=f"Largest order tested for isomorphism (default: {DEFAULT_ISO_LIMIT})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alliancepoly",
        description="alliancepoly - Defensive alliance polynomials of graphs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="Log debug messages")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="Only log warnings")
    subparsers = parser.add_subparsers(dest="command")

    # poly subcommand
    poly_parser = subparsers.add_parser("poly", help="Compute da or a derived polynomial")
    _add_input_flags(poly_parser)
    poly_parser.add_argument(
        "--which",
        type=str,
        choices=["da", "A", "a", "q", "k"],
        default="da",
        help="da (default), alliance A, strong alliance a, induced connected q, "
        "or k-alliance counts (with --k)",
    )
    poly_parser.add_argument("--k", type=int, default=None, help="k for --which k")
    poly_parser.add_argument(
        "--check",
        action="store_true",
        help="Cross-check the enumeration against brute force",
    )
    _add_enum_flags(poly_parser)
    _add_format_flag(poly_parser)

    # props subcommand
    props_parser = subparsers.add_parser("props", help="Extract graph invariants from da")
    _add_input_flags(props_parser)
    _add_enum_flags(props_parser)
    _add_format_flag(props_parser)

    # identify subcommand
    identify_parser = subparsers.add_parser(
        "identify", help="Find the families whose polynomial equals the input's"
    )
    _add_input_flags(identify_parser)
    _add_enum_flags(identify_parser)
    _add_format_flag(identify_parser)

    # compare subcommand
    compare_parser = subparsers.add_parser("compare", help="Compare two inputs")
    _add_input_flags(compare_parser)
    _add_enum_flags(compare_parser)
    _add_iso_flag(compare_parser)
    _add_format_flag(compare_parser)

    # scan subcommand
    scan_parser = subparsers.add_parser("scan", help="Bucket a corpus by a polynomial")
    scan_parser.add_argument(
        "corpus",
        help="graph6 file, edge-list directory, atlas:N, atlas:A-B or labeled:N",
    )
    scan_parser.add_argument(
        "--key",
        type=str,
        choices=list(SCAN_KEYS),
        default="A",
        help="Polynomial to bucket by (default: A)",
    )
    _add_enum_flags(scan_parser)
    _add_iso_flag(scan_parser)
    _add_format_flag(scan_parser)

    # family subcommand
    family_parser = subparsers.add_parser(
        "family", help="Print a family's closed form without enumerating"
    )
    family_parser.add_argument("spec", help="Family instance, e.g. complete_bipartite:3,4")
    family_parser.add_argument(
        "--errata",
        type=str,
        choices=[mode.value for mode in ErrataMode],
        default=ErrataMode.CORRECTED.value,
        help="Star formula: corrected (default) or printed (as published)",
    )
    _add_format_flag(family_parser)

    # verify subcommand
    verify_parser = subparsers.add_parser(
        "verify", help="Check a family's characterization over a corpus"
    )
    verify_parser.add_argument("spec", help="Family instance, e.g. cycle:5")
    verify_parser.add_argument(
        "corpus",
        help="graph6 file, edge-list directory, atlas:N, atlas:A-B or labeled:N",
    )
    _add_enum_flags(verify_parser)
    _add_iso_flag(verify_parser)
    _add_format_flag(verify_parser)

    # corpus subcommand
    corpus_parser = subparsers.add_parser("corpus", help="Write a corpus as graph6 lines")
    corpus_parser.add_argument(
        "source",
        nargs="?",
        help="atlas:N, atlas:A-B, labeled:N, an edge-list directory or a graph6 file",
    )
    corpus_parser.add_argument(
        "--random", type=int, default=None, metavar="COUNT", help="Generate random graphs"
    )
    corpus_parser.add_argument("--order", type=int, default=None, help="Order of random graphs")
    corpus_parser.add_argument(
        "--p", type=float, default=0.5, help="Edge probability of random graphs (default: 0.5)"
    )
    corpus_parser.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    corpus_parser.add_argument(
        "-o", "--output", type=str, default=None, help="Output file (default: stdout)"
    )

    return parser


COMMANDS = {
    "poly": run_poly,
    "props": run_props,
    "identify": run_identify,
    "compare": run_compare,
    "scan": run_scan,
    "family": run_family,
    "verify": run_verify,
    "corpus": run_corpus,
}


def main(argv: list[str] | None = None) -> None:
    """Main entry point for the CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)

    # Configure logging
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    command = COMMANDS.get(args.command)
    if command is None:
        parser.print_help()
        return
    try:
        command(args)
    except AlliancePolyError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(e.exit_code)


if __name__ == "__main__":
    main()
