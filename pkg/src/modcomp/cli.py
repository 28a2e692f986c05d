"""Command-line front end: ``modcomp {check,fit,pca}``.

Exit codes: 0 success, 1 invalid flags, 2 unreadable/malformed input,
3 assumption violation, 4 degenerate data.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone

import numpy as np

from . import report as rpt
from .cluster import kmeans_labels, label_agreement
from .components import DEFAULT_SEP_TOL, check_assumptions, embed, fit, row_scale_factors
from .errors import InvalidFlag, ModcompError, ParseError
from .io import DatasetSpec, load_dataset, write_embedding_csv
from .linalg import DEFAULT_RANK_TOL
from .modularity import gram_has_negative_entries, partition_by_sign
from .pca import pca_embed, pca_fit, zero_count

EXIT_OK = 0
EXIT_INVALID_FLAG = 1
EXIT_PARSE = 2
EXIT_ASSUMPTION = 3
EXIT_DEGENERATE = 4

KMEANS_NOTE = "kmeans labels come from generic seeded k-means on the embedding; they are a convenience, not part of MCA"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID_FLAG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="modcomp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--input", required=True, metavar="PATH")
    common.add_argument("--delimiter", default=",", metavar="CHAR")
    common.add_argument("--orientation", choices=("rows", "cols"), default="rows",
                        help="rows: each line is a data point (default); cols: each file column is a data point")
    common.add_argument("--label-col", type=int, default=None, metavar="N", help="0-based label field to exclude")
    common.add_argument("--header", action="store_true", help="first non-blank line holds column names")
    common.add_argument("--rank-tol", type=float, default=DEFAULT_RANK_TOL, metavar="F")
    common.add_argument("--output", default=None, metavar="PATH", help="JSON report path (default stdout)")

    audit = _Parser(add_help=False)
    audit.add_argument("--sep-tol", type=float, default=DEFAULT_SEP_TOL, metavar="F")

    fitting = _Parser(add_help=False)
    fitting.add_argument("--components", type=int, default=1, metavar="R")
    fitting.add_argument("--emit-embedding", default=None, metavar="PATH")
    fitting.add_argument("--kmeans", type=int, default=None, metavar="K")
    fitting.add_argument("--seed", type=int, default=0, metavar="N")

    p = sub.add_parser("check", parents=[common, audit], help="audit the modularity-component assumptions")
    p.add_argument("--normalize-rows", action="store_true")
    p.set_defaults(handler=cmd_check)
    p = sub.add_parser("fit", parents=[common, audit, fitting], help="fit modularity components")
    p.add_argument("--normalize-rows", action="store_true")
    p.set_defaults(handler=cmd_fit)
    p = sub.add_parser("pca", parents=[common, fitting], help="centered PCA baseline")
    p.add_argument("--standardize", action="store_true", help="scale attributes to unit variance after centering")
    p.set_defaults(handler=cmd_pca)
    return parser


def _spec(args) -> DatasetSpec:
    return DatasetSpec(args.input, args.delimiter, args.orientation, args.label_col, args.header)


def _parameters(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "handler"}


def _dataset_summary(args, X) -> dict:
    return {"path": args.input, "p": X.shape[0], "n": X.shape[1]}


def _labels_section(report, labels_by_method, truth):
    report["labels"] = labels_by_method
    if truth is not None:
        report["label_agreement"] = {m: label_agreement(lab, truth) for m, lab in labels_by_method.items()}


def _validate_fitting_flags(args):
    if args.components < 1:
        raise InvalidFlag(f"--components must be at least 1, got {args.components}")
    if args.kmeans is not None and args.kmeans < 1:
        raise InvalidFlag(f"--kmeans must be at least 1, got {args.kmeans}")


def _prepared(args, X):
    if getattr(args, "normalize_rows", False):
        return X * row_scale_factors(X)[:, None]
    return X


def _audit_into(report, args, X):
    """Fill the assumption sections; return (assumption report, exit code)."""
    rep = check_assumptions(_prepared(args, X), args.rank_tol, args.sep_tol)
    report["dataset"].update(k=rep.k, two_m=rep.two_m)
    report["alpha"] = rep.alpha
    report["beta"] = rep.beta
    report["assumptions"] = rpt.assumption_dict(rep)
    if rep.degenerate or rep.k < 2:
        return rep, EXIT_DEGENERATE
    if not rep.passed:
        return rep, EXIT_ASSUMPTION
    return rep, EXIT_OK


def _status(code):
    return {EXIT_OK: "ok", EXIT_ASSUMPTION: "assumption_violation", EXIT_DEGENERATE: "degenerate"}[code]


def _warn_negative(report, X):
    if gram_has_negative_entries(X):
        report["warnings"].append("some data points have negative dot products (negative similarities)")


def cmd_check(args, report, data) -> int:
    X = data.X
    _warn_negative(report, X)
    rep, code = _audit_into(report, args, X)
    # Rank below 2 passes vacuously for the audit itself.
    if code == EXIT_DEGENERATE and not rep.degenerate:
        code = EXIT_OK
    report["status"] = _status(code)
    return code


def cmd_fit(args, report, data) -> int:
    _validate_fitting_flags(args)
    X = data.X
    _warn_negative(report, X)
    rep, code = _audit_into(report, args, X)
    if code != EXIT_OK:
        report["status"] = _status(code)
        return code
    if args.components > rep.k - 1:
        raise InvalidFlag(f"--components {args.components} exceeds rank - 1 = {rep.k - 1}")

    model = fit(X, args.components, args.rank_tol, args.sep_tol, normalize_rows=args.normalize_rows)
    E = embed(model, X)
    report["components"] = [
        {"index": rec.index, "beta": rec.beta, "modularity": rec.modularity, "m_norm_sq": float(rec.m @ rec.m)}
        for rec in model.components
    ]
    labels = {"sign": partition_by_sign(model.components[0].b)}
    if args.kmeans is not None:
        labels["kmeans"] = kmeans_labels(E, args.kmeans, args.seed)
        report["notes"].append(KMEANS_NOTE)
    _labels_section(report, labels, data.labels)
    _emit(report, args, E)
    report["status"] = "ok"
    return EXIT_OK


def cmd_pca(args, report, data) -> int:
    _validate_fitting_flags(args)
    X = data.X
    p, n = X.shape
    if args.components > min(p, n - 1):
        raise InvalidFlag(f"--components {args.components} exceeds min(p, n - 1) = {min(p, n - 1)}")
    model = pca_fit(X, args.components, standardize=args.standardize)
    centered = model.center(X)
    report["centering_applied"] = True
    report["zero_count_before"] = zero_count(X)
    report["zero_count_after"] = zero_count(centered)
    report["variances"] = model.variances
    report["warnings"].extend(model.advisories)
    E = pca_embed(model, X)
    labels = {"sign": partition_by_sign(E[0])}
    if args.kmeans is not None:
        labels["kmeans"] = kmeans_labels(E, args.kmeans, args.seed)
        report["notes"].append(KMEANS_NOTE)
    _labels_section(report, labels, data.labels)
    _emit(report, args, E)
    report["status"] = "ok"
    return EXIT_OK


def _emit(report, args, E):
    if args.emit_embedding:
        write_embedding_csv(args.emit_embedding, E)
        report["embedding_path"] = args.emit_embedding


def _write(report, args):
    text = rpt.dumps(report)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None, timestamp: str | None = None) -> int:
    args = build_parser().parse_args(argv)
    stamp = timestamp or datetime.now(timezone.utc).isoformat(timespec="seconds")
    report = rpt.new_report(args.command, _parameters(args), stamp)
    try:
        data = load_dataset(_spec(args))
        report["dataset"] = _dataset_summary(args, data.X)
        code = args.handler(args, report, data)
    except ParseError as exc:
        print(f"modcomp: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidFlag as exc:
        print(f"modcomp: {exc}", file=sys.stderr)
        return EXIT_INVALID_FLAG
    except ModcompError as exc:
        report["status"] = "degenerate"
        report["error"] = str(exc)
        _write(report, args)
        print(f"modcomp: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    _write(report, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
