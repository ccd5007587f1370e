"""Command-line interface.

Exit codes: 0 success, 2 unreadable or malformed input, 3 invalid input
(non-monotone path, semimetric violation, incomparable grades, ...), 4 the
simplex cap was hit.
"""
from __future__ import annotations

import argparse
import logging
import math
import os
import platform
import sys
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .engine import DEFAULT_MAX_SIMPLICES, vr_barcode
from .errors import ParseError, ResourceLimitError, ValidationError
from .formats import (barcode_to_dict, dataset_from_dict, dataset_to_dict, dumps, load_json,
                      parse_edge_annotations, parse_path, parse_point_annotations, pathwise_to_dict)
from .genomic import SynthSpec, ingest_fasta, synth_dataset, tri_analysis, tri_csv, tri_summary
from .multifiltration import build_pathwise_edges
from .oracle import ExplicitComplex, barcode_from_filtration, betti
from .pathwise import as_pathwise, pathwise_barcode, rank_invariant, rank_invariant_table
from .poset import as_grade
from .semimetric import format_lower_distance, parse_lower_distance
from .transform import transform

log = logging.getLogger("pathpers")

EXIT_PARSE, EXIT_VALIDATION, EXIT_RESOURCE = 2, 3, 4


def _read_text(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _grade_arg(text: str):
    try:
        return as_grade(float(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"cannot parse grade {text!r}; use comma-separated numbers") from None


def _threshold(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"invalid threshold {text!r}") from None
    if math.isnan(value) or value < 0:
        raise ValidationError("threshold must be a non-negative number or inf")
    return value


def _complex_input(args):
    """Edge list and vertex count from either an edge annotation file or matrix + point annotations."""
    path = parse_path(load_json(args.path))
    if args.edges:
        annotations, n = parse_edge_annotations(load_json(args.edges))
        return annotations, n, path
    if not (args.matrix and args.annotations):
        raise ParseError("give --edges, or both --matrix and --annotations")
    h = parse_lower_distance(_read_text(args.matrix))
    points = parse_point_annotations(load_json(args.annotations))
    return build_pathwise_edges(h, points, path, threads=args.threads), h.size, path


def cmd_transform(args) -> None:
    edges, n, path = _complex_input(args)
    d = transform(edges, path, n, threads=args.threads)
    _write(args.output, format_lower_distance(d))


def cmd_barcode(args) -> None:
    d = parse_lower_distance(_read_text(args.matrix))
    if args.path:
        path = parse_path(load_json(args.path))
        threshold = len(path) if args.threshold is None else _threshold(args.threshold)
        if args.max_dim < 1:
            raise ValidationError("pathwise barcodes need --max-dim >= 1")
        bc = vr_barcode(d, args.max_dim, threshold, args.reps, args.max_simplices)
        out = pathwise_to_dict(as_pathwise(bc, path))
    else:
        threshold = math.inf if args.threshold is None else _threshold(args.threshold)
        bc = vr_barcode(d, args.max_dim, threshold, args.reps, args.max_simplices)
        out = barcode_to_dict(bc)
    _write(args.output, dumps(out))


def cmd_pathwise(args) -> None:
    edges, n, path = _complex_input(args)
    pb = pathwise_barcode(edges, n, path, args.max_dim, with_reps=args.reps, threads=args.threads,
                          max_simplices=args.max_simplices)
    _write(args.output, dumps(pathwise_to_dict(pb)))


def cmd_rank(args) -> None:
    annotations, n = parse_edge_annotations(load_json(args.edges))
    if args.sample:
        sample = [tuple(float(x) for x in g) for g in load_json(args.sample)]
        table = rank_invariant_table(annotations, n, sample, args.dim, max_simplices=args.max_simplices)
        out = {"dim": args.dim,
               "ranks": [{"v": list(v), "w": list(w), "rank": r} for (v, w), r in sorted(table.items())]}
    else:
        if not (args.v and args.w):
            raise ParseError("give --v and --w, or --sample")
        v, w = _grade_arg(args.v), _grade_arg(args.w)
        r = rank_invariant(annotations, n, v, w, args.dim, max_simplices=args.max_simplices)
        out = {"dim": args.dim, "v": list(v), "w": list(w), "rank": r}
    _write(args.output, dumps(out))


def cmd_tri(args) -> None:
    if args.dataset:
        data = dataset_from_dict(load_json(args.dataset))
        report = None
    elif args.fasta and args.metadata:
        data, report = ingest_fasta(args.fasta, args.metadata, args.binning,
                                    reference_id=args.reference_id, reference_path=args.reference)
    else:
        raise ParseError("give --dataset, or --fasta together with --metadata")
    result = tri_analysis(data, threads=args.threads, max_simplices=args.max_simplices)
    _write(args.output, tri_csv(result.table))
    if args.summary:
        summary = tri_summary(result)
        if report is not None:
            summary["ingest"] = report.as_dict()
        _write(args.summary, dumps(summary))


def cmd_oracle(args) -> None:
    obj = load_json(args.complex)
    if isinstance(obj, dict) and "filtration" in obj:
        chain = [ExplicitComplex(step) for step in obj["filtration"]]
        bars = []
        for dim in range(args.max_dim + 1):
            bars += [{"dim": dim, "birth": b, "death": d} for b, d in barcode_from_filtration(chain, dim)]
        out = {"field": "F2", "bars": bars,
               "betti": [[betti(x, dim) for dim in range(args.max_dim + 1)] for x in chain]}
    elif isinstance(obj, dict) and "simplices" in obj:
        x = ExplicitComplex(obj["simplices"])
        out = {"field": "F2", "betti": [betti(x, dim) for dim in range(args.max_dim + 1)]}
    else:
        raise ParseError("oracle input needs 'simplices' or 'filtration'")
    _write(args.output, dumps(out))


def cmd_synth(args) -> None:
    spec = SynthSpec(length=args.length, tree_size=args.tree_size, homoplasies=args.homoplasies,
                     time_bins=args.time_bins, seed=args.seed)
    data, truth = synth_dataset(spec)
    _write(args.output, dumps({"dataset": dataset_to_dict(data), "truth": truth}))
    if args.fasta:
        _write(args.fasta, "".join(f">{i}\n{s}\n" for i, s in zip(data.ids, data.sequences)))
    if args.metadata:
        import datetime as dt
        start = dt.date(2021, 1, 1)
        rows = [f"{i},{(start + dt.timedelta(days=t - 1)).isoformat()}" for i, t in zip(data.ids, data.times)]
        _write(args.metadata, "id,date\n" + "\n".join(rows) + "\n")


def _version_string() -> str:
    return (f"pathpers {__version__} (python {platform.python_version()}, numpy {np.__version__}, "
            f"field F2)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathpers", description=__doc__.splitlines()[0], allow_abbrev=False)
    parser.add_argument("--version", action="version", version=_version_string())
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("-o", "--output", default="-", help="output file, '-' for stdout")
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
        p.add_argument("--max-simplices", type=int, default=DEFAULT_MAX_SIMPLICES)
        return p

    def complex_inputs(p):
        p.add_argument("--edges", help="edge annotation JSON file")
        p.add_argument("--matrix", help="lower-distance matrix of the point cloud")
        p.add_argument("--annotations", help="point annotation JSON file")
        p.add_argument("--path", required=True, help="path JSON file")

    p = common(sub.add_parser("transform", help="Vietoris-Rips transformation along a path"))
    complex_inputs(p)
    p.set_defaults(func=cmd_transform)

    p = common(sub.add_parser("barcode", help="Vietoris-Rips barcode of a lower-distance matrix"))
    p.add_argument("matrix")
    p.add_argument("--max-dim", type=int, default=1)
    p.add_argument("--threshold", default=None, help="largest scale (default inf, or path length with --path)")
    p.add_argument("--reps", action="store_true", help="attach representative 1-cycles")
    p.add_argument("--path", help="report in path-step units for a transformed matrix")
    p.set_defaults(func=cmd_barcode)

    p = common(sub.add_parser("pathwise", help="barcode along a path in a multi-filtered flag complex"))
    complex_inputs(p)
    p.add_argument("--max-dim", type=int, default=1)
    p.add_argument("--reps", action="store_true")
    p.set_defaults(func=cmd_pathwise)

    p = common(sub.add_parser("rank", help="rank invariant from two-step paths"))
    p.add_argument("--edges", required=True)
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--v", help="lower grade, e.g. 1,2")
    p.add_argument("--w", help="upper grade")
    p.add_argument("--sample", help="JSON list of grades; ranks for all comparable pairs")
    p.set_defaults(func=cmd_rank)

    p = common(sub.add_parser("tri", help="topological recurrence index over time"))
    p.add_argument("--dataset", help="dataset JSON (as written by synth)")
    p.add_argument("--fasta")
    p.add_argument("--metadata", help="CSV with columns id,date")
    p.add_argument("--binning", choices=("day", "week", "month"), default="day")
    p.add_argument("--reference-id")
    p.add_argument("--reference", help="FASTA file holding the reference sequence")
    p.add_argument("--summary", help="write the per-mutation summary JSON here")
    p.set_defaults(func=cmd_tri)

    p = common(sub.add_parser("oracle", help="brute-force homology of an explicit complex"))
    p.add_argument("complex")
    p.add_argument("--max-dim", type=int, default=1)
    p.set_defaults(func=cmd_oracle)

    p = common(sub.add_parser("synth", help="synthetic phylogeny with planted homoplasies"))
    p.add_argument("--length", type=int, default=200)
    p.add_argument("--tree-size", type=int, default=50)
    p.add_argument("--homoplasies", type=int, default=0)
    p.add_argument("--time-bins", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fasta", help="also write the sequences as FASTA")
    p.add_argument("--metadata", help="also write id,date metadata CSV (day bins from 2021-01-01)")
    p.set_defaults(func=cmd_synth)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be at least 1")
    try:
        args.func(args)
    except ParseError as exc:
        log.error("%s", exc)
        return EXIT_PARSE
    except ValidationError as exc:
        log.error("%s", exc)
        return EXIT_VALIDATION
    except ResourceLimitError as exc:
        log.error("%s", exc)
        return EXIT_RESOURCE
    return 0


if __name__ == "__main__":
    sys.exit(main())
