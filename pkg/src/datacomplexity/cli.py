"""Command-line front end.

    datacomplexity measure FILE --label COL [--measures N3,F1 | --groups ...]
    datacomplexity batch DIR --label COL --output matrix.csv
    datacomplexity synth clusters --n 50 --classes 2 --sep 5 --seed 7 -o out.csv

Exit codes: 0 all measures ok, 1 input error, 2 some measure failed.
``DATACOMPLEXITY_SEED`` and ``DATACOMPLEXITY_EPSILON`` set defaults for
``--seed`` and ``--epsilon``.
"""
import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import synth
from .dataset import ComplexityError, IngestionOptions, dumps_dataset, load_dataset
from .report import (ID_COLUMNS, RunParams, compute_all, csv_row, format_table,
                     resolve_selection, serialize)

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 1, 2
DATA_SUFFIXES = (".csv", ".tsv", ".txt")


def _env(name, cast, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        return default


def _label(value):
    return int(value) if value.lstrip("-").isdigit() else value


def _selection(args):
    parts = []
    for opt in (args.measures, args.groups):
        if opt:
            parts += [p for p in opt.split(",") if p.strip()]
    return parts or None


def _params(args):
    return RunParams(seed=args.seed, epsilon=args.epsilon, C=args.svm_c, impute=args.impute)


def _add_run_options(p):
    p.add_argument("--label", default="-1", help="label column name or zero-based index (default: last)")
    p.add_argument("--measures", help="comma-separated measure ids, e.g. N3,F1")
    p.add_argument("--groups", help="comma-separated groups: feature, linearity, neighborhood, "
                                    "network, dimensionality, balance")
    p.add_argument("--seed", type=int, default=_env("DATACOMPLEXITY_SEED", int, 0))
    p.add_argument("--epsilon", type=float, default=_env("DATACOMPLEXITY_EPSILON", float, 0.15))
    p.add_argument("--svm-c", type=float, default=1.0, dest="svm_c")
    p.add_argument("--impute", action="store_true", help="fill missing cells with median/mode")
    p.add_argument("--jobs", type=int, default=1)


def cmd_measure(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        selection = resolve_selection(_selection(args))
        d = load_dataset(args.input, _label(args.label), IngestionOptions(impute=args.impute))
    except (OSError, ComplexityError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    report = compute_all(d, selection, _params(args), jobs=args.jobs)
    fmt = args.format or ("json" if args.output else "table")
    if fmt == "table":
        payload = format_table(report).encode()
    else:
        payload = serialize(report, fmt)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(payload)
    else:
        out.write(payload.decode())
    return EXIT_OK if all(r.ok for r in report.measures.values()) else EXIT_FAILED


def _sidecar(path):
    """Per-file options from ``<stem>.json`` next to the dataset, if present."""
    side = os.path.splitext(path)[0] + ".json"
    if os.path.exists(side):
        with open(side) as fh:
            return json.load(fh)
    return {}


def _batch_one(path, args, selection):
    name = os.path.splitext(os.path.basename(path))[0]
    try:
        cfg = _sidecar(path)
        label = cfg.get("label", _label(args.label))
        impute = bool(cfg.get("impute", args.impute))
        d = load_dataset(path, label, IngestionOptions(impute=impute, name=name))
    except (OSError, ValueError) as exc:
        return [name, "", "", ""] + [""] * len(selection) + [f"load failed: {exc}"], False
    params = _params(args)
    params.impute = impute
    report = compute_all(d, selection, params)
    failed = [w for w in report.warnings if " failed: " in w]
    return csv_row(report) + ["; ".join(failed)], not failed


def cmd_batch(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        selection = resolve_selection(_selection(args))
        files = sorted(
            os.path.join(args.directory, f) for f in os.listdir(args.directory)
            if f.lower().endswith(DATA_SUFFIXES)
        )
    except (OSError, ComplexityError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    if not files:
        print(f"error: no delimited files in {args.directory}", file=err)
        return EXIT_INPUT
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as ex:
        rows = list(ex.map(lambda p: _batch_one(p, args, selection), files))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(ID_COLUMNS) + selection + ["warnings"])
    for row, _ in rows:
        w.writerow(row)
    for row, ok in rows:
        if not ok:
            print(f"warning: {row[0]}: {row[-1]}", file=err)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return EXIT_OK if all(ok for _, ok in rows) else EXIT_FAILED


def cmd_synth(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        if args.fixture == "clusters":
            d = synth.make_clusters(args.n, args.classes, args.sep, args.spread, args.seed, args.features)
        elif args.fixture == "rings":
            radii = [float(r) for r in args.radii.split(",")]
            d = synth.make_rings(args.n, radii, args.seed)
        elif args.fixture == "alternating-line":
            d = synth.make_alternating_line(args.n)
        else:
            raise ComplexityError(f"unknown fixture {args.fixture!r}")
    except (ComplexityError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    text = dumps_dataset(d)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="datacomplexity", description="Classification complexity measures")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="measure one dataset")
    p.add_argument("input")
    _add_run_options(p)
    p.add_argument("--format", choices=("json", "csv", "table"))
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("batch", help="one meta-feature row per dataset in a directory")
    p.add_argument("directory")
    _add_run_options(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("synth", help="write a synthetic dataset")
    p.add_argument("fixture", help="clusters, rings or alternating-line")
    p.add_argument("--n", type=int, default=50, help="examples per class (points for alternating-line)")
    p.add_argument("--classes", type=int, default=2)
    p.add_argument("--sep", type=float, default=5.0)
    p.add_argument("--spread", type=float, default=0.5)
    p.add_argument("--features", type=int, default=2)
    p.add_argument("--radii", default="1,3")
    p.add_argument("--seed", type=int, default=_env("DATACOMPLEXITY_SEED", int, 0))
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_synth)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
