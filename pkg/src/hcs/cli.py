"""Command-line harness: construction, extraction, certification, experiments.

Subcommands:
  construct      build an extremal instance and write graph JSON + metadata
  extract        run the subgraph extractor on a graph JSON file
  verify-bounds  certify the proof-obligation table
  experiment     randomized testing of the density implication, CSV output
  certify        re-verify a constructed instance from its JSON file

Exit codes: 0 all passed, 1 any failure, 2 usage error. The environment
variable HCS_LOG in {quiet, info, debug} controls logging verbosity.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import (
    ParameterAlternative,
    density_threshold,
    get_alternative,
    reports_to_csv,
    reports_to_json,
    verify_all_bounds,
    verify_alternative,
)
from .connectivity import is_k1_connected
from .extractor import FOUND, extract, result_to_json_dict
from .extremal import (
    build_extremal,
    extremal_from_json_dict,
    extremal_to_json_dict,
    sharpness_rate,
    verify_extremal,
)
from .graphs import (
    SimpleGraph,
    average_degree,
    graph_from_json_dict,
    graph_to_dot,
    induced_subgraph,
)

log = logging.getLogger("hcs")

_LOG_LEVELS = {"quiet": logging.WARNING, "info": logging.INFO, "debug": logging.DEBUG}


def _setup_logging() -> None:
    level = _LOG_LEVELS.get(os.environ.get("HCS_LOG", "info"), logging.INFO)
    logging.basicConfig(level=level, format="%(levelname)s %(message)s")


@dataclass(frozen=True)
class ExperimentConfig:
    """Reproducible batch configuration; trial t uses seed + t."""

    trials: int
    k: int
    n_range: tuple[int, int]
    alternative_id: int
    seed: int
    out_path: Optional[str] = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        lo, hi = self.n_range
        if lo > hi or lo < 1:
            raise ValueError("n_range must be a non-empty positive interval")
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must fit in 64 bits")


@dataclass(frozen=True)
class TrialRow:
    trial: int
    n: int
    e: int
    d_bar: Fraction
    outcome: str
    h_size: Optional[int]
    elapsed_ms: int

    def csv_fields(self) -> list[str]:
        return [
            str(self.trial),
            str(self.n),
            str(self.e),
            str(self.d_bar),
            self.outcome,
            "" if self.h_size is None else str(self.h_size),
            str(self.elapsed_ms),
        ]


NOT_APPLICABLE_SATURATED = "NOT_APPLICABLE_SATURATED"


def _threshold_edge_count(n: int, threshold: Fraction) -> int:
    """Smallest e with 2e/n >= threshold."""
    target = n * threshold / 2
    e = target.numerator // target.denominator
    if Fraction(e) < target:
        e += 1
    return e


def run_trial(t: int, cfg: ExperimentConfig, alt: ParameterAlternative) -> TrialRow:
    rng = random.Random(cfg.seed + t)
    n = rng.randint(*cfg.n_range)
    threshold = density_threshold(alt, cfg.k)[1]  # certified upper end
    start = time.perf_counter()
    target_e = _threshold_edge_count(n, threshold)
    max_e = n * (n - 1) // 2
    if target_e > max_e:
        elapsed = int((time.perf_counter() - start) * 1000)
        return TrialRow(t, n, 0, Fraction(0), NOT_APPLICABLE_SATURATED, None, elapsed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    g = SimpleGraph(n, frozenset(pairs[:target_e]))
    result = extract(g, cfg.k, alt.sigma)
    h_size = None
    if result.outcome == FOUND:
        sub = induced_subgraph(g, result.subgraph)
        if not is_k1_connected(sub.graph, cfg.k):
            raise AssertionError("trial subgraph fails re-verification")
        h_size = len(result.subgraph)
    elapsed = int((time.perf_counter() - start) * 1000)
    return TrialRow(t, n, g.edge_count, average_degree(g), result.outcome, h_size, elapsed)


def run_experiment(cfg: ExperimentConfig) -> tuple[list[TrialRow], bool]:
    """Run all trials; returns the rows and whether every applicable trial found."""
    alt = get_alternative(cfg.alternative_id)
    rows = [run_trial(t, cfg, alt) for t in range(1, cfg.trials + 1)]
    ok = all(r.outcome in (FOUND, NOT_APPLICABLE_SATURATED) for r in rows)
    return rows, ok


def rows_to_csv(rows: Sequence[TrialRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["trial", "n", "e", "d_bar", "outcome", "h_size", "elapsed_ms"])
    for r in rows:
        writer.writerow(r.csv_fields())
    return buf.getvalue()


# --- subcommand handlers ---------------------------------------------------------

def _load_graph(path: str) -> SimpleGraph:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if "graph" in data:  # accept construct output as well
        data = data["graph"]
    return graph_from_json_dict(data)


def _cmd_construct(args) -> int:
    e = build_extremal(args.k, args.sigma_k, args.level)
    payload = extremal_to_json_dict(e)
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(graph_to_dot(e.graph))
    lhs, rhs = sharpness_rate(e)
    log.info(
        "constructed level-%d instance: %d vertices, %d edges, rate %s >= %s",
        e.level, e.graph.n, e.graph.edge_count, lhs, rhs,
    )
    print(f"wrote {args.out}: n={e.graph.n} e={e.graph.edge_count}")
    return 0


def _parse_sigma(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse sigma {text!r}") from exc


def _cmd_extract(args) -> int:
    g = _load_graph(args.infile)
    if args.alt is not None:
        sigma = get_alternative(args.alt).sigma
    else:
        sigma = _parse_sigma(args.sigma)
    result = extract(g, args.k, sigma)
    payload = result_to_json_dict(result)
    text = json.dumps(payload, indent=1)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    log.info("extraction outcome: %s", result.outcome)
    return 0


def _cmd_verify_bounds(args) -> int:
    grid_step = Fraction(args.grid_step) if args.grid_step else None
    if args.alt == "all":
        reports = verify_all_bounds(grid_step=grid_step)
    else:
        reports = verify_alternative(get_alternative(int(args.alt)), grid_step=grid_step)
    width = max(len(r.obligation_id) for r in reports)
    for r in reports:
        print(
            f"{r.obligation_id:<{width}}  lhs={r.lhs:>18} rhs={r.rhs:>18} "
            f"margin={float(r.margin):>12.4g}  {r.verdict}"
        )
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(reports_to_csv(reports))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(reports_to_json(reports), fh, indent=1)
            fh.write("\n")
    failed = [r for r in reports if r.verdict == "FAIL"]
    print(f"{len(reports) - len(failed)}/{len(reports)} obligations passed")
    return 1 if failed else 0


def _cmd_experiment(args) -> int:
    cfg = ExperimentConfig(
        trials=args.trials,
        k=args.k,
        n_range=(args.n_min, args.n_max),
        alternative_id=args.alt,
        seed=args.seed,
        out_path=args.csv,
    )
    rows, ok = run_experiment(cfg)
    text = rows_to_csv(rows)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    found = sum(1 for r in rows if r.outcome == FOUND)
    saturated = sum(1 for r in rows if r.outcome == NOT_APPLICABLE_SATURATED)
    print(f"{found} found, {saturated} saturated, {len(rows)} trials: "
          f"{'OK' if ok else 'FAILED'}")
    return 0 if ok else 1


def _cmd_certify(args) -> int:
    with open(args.infile, "r", encoding="utf-8") as fh:
        e = extremal_from_json_dict(json.load(fh))
    report = verify_extremal(e)
    brute = (
        "skipped" if report.brute_force_ok is None
        else ("pass" if report.brute_force_ok else "FAIL")
    )
    checks = [
        ("no-large-connected-subgraph", report.no_large_subgraph_ok,
         f"certificate={'pass' if report.certificate_ok else 'FAIL'} brute={brute}"),
        ("vertex-count", report.vertex_count_ok, ""),
        ("pool-partition", report.partition_ok, ""),
        ("edge-bound", report.edge_bound_ok,
         f"e={report.edge_count} bound={float(report.edge_lower_bound):.6g}"),
    ]
    for name, ok, extra in checks:
        line = f"{name}: {'PASS' if ok else 'FAIL'}"
        if extra:
            line += f"  ({extra})"
        print(line)
    rate_ok = True
    try:
        lhs, rhs = sharpness_rate(e)
        print(f"rate: 2e/(v-k) = {lhs} >= {rhs}")
    except ArithmeticError as exc:
        rate_ok = False
        print(f"rate: FAIL ({exc})")
    return 0 if report.passed and rate_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hcs",
        description="Dense graphs and large highly connected subgraphs: "
        "constructions, extraction, and bound certification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an extremal instance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sigma-k", type=int, required=True, dest="sigma_k")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dot", help="also write a DOT rendering")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("extract", help="extract a highly connected subgraph")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--sigma", help="size parameter as an exact rational, e.g. 0.2 or 1/5")
    group.add_argument("--alt", type=int, choices=(1, 2, 3))
    p.add_argument("--out")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("verify-bounds", help="certify the proof-obligation table")
    p.add_argument("--alt", choices=("1", "2", "3", "all"), required=True)
    p.add_argument("--grid-step", help="override the fallback grid step (rational)")
    p.add_argument("--csv", help="write the reports as CSV")
    p.add_argument("--json", help="write the reports as JSON")
    p.set_defaults(func=_cmd_verify_bounds)

    p = sub.add_parser("experiment", help="randomized density-implication trials")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alt", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", help="output CSV path (stdout when omitted)")
    p.add_argument("--n-min", type=int, default=15)
    p.add_argument("--n-max", type=int, default=50)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("certify", help="re-verify a constructed instance")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_certify)

    return parser


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv and run the chosen subcommand; returns the exit code."""
    _setup_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
