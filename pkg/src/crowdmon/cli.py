"""Command-line front end.

Subcommands:

    analyze   replay a message file through the full pipeline and write
              timeseries.csv / alerts.jsonl / summary.json
    replay    same analysis, but emit each window's record to stdout as it
              completes, optionally paced in wall-clock time
    generate  synthesize a seeded message stream (plus ground truth) from a
              schedule file, for testing and demos

Exit codes: 0 success, 1 error, 2 success with at least one danger alert
(machine-checkable), 64 usage.
"""

from __future__ import annotations

import argparse
import re
import sys
import time
from pathlib import Path
from typing import Sequence

from .engine import analyze_messages
from .ingest import (
    BoundingBox,
    EventFilter,
    ParseStats,
    StreamFormatError,
    apply_filter,
    parse_instant,
    parse_stream,
)
from .lexicon import LexiconError, load_lexicon
from .report import (
    RunReport,
    TimeseriesWriter,
    timeseries_row,
    write_alerts,
    write_ground_truth,
    write_message_stream,
    write_summary,
)
from .synth import DEFAULT_ORIGIN, InfeasibleScheduleError, generate_messages, load_schedule
from .temporal import AnalysisConfig

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ALERT = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    # usage problems exit 64, reserving 1/2 for run outcomes
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _instant_arg(value: str):
    ts = parse_instant(value)
    if ts is None:
        raise argparse.ArgumentTypeError(
            f"{value!r} is not an ISO-8601 instant with explicit UTC offset"
        )
    return ts


def _bbox_arg(value: str) -> BoundingBox:
    parts = value.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("bbox must be lat1,lon1,lat2,lon2")
    try:
        lat1, lon1, lat2, lon2 = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError("bbox coordinates must be numbers") from None
    try:
        return BoundingBox.from_corners(lat1, lon1, lat2, lon2)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pace_arg(value: str) -> str:
    if value in ("0", "realtime") or re.fullmatch(r"\d+ms", value):
        return value
    raise argparse.ArgumentTypeError("pace must be 0, realtime, or <N>ms")


def _add_analysis_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lexicon", required=True, help="emotion lexicon file (TSV)")
    p.add_argument("--input", required=True, help="message stream file")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--interval-minutes", type=int, default=15, metavar="N")
    p.add_argument("--z-threshold", type=float, default=1.0, metavar="X")
    p.add_argument("--ma-window", type=int, default=8, metavar="N")
    p.add_argument("--min-classified", type=int, default=1, metavar="N")
    p.add_argument("--from", dest="from_time", type=_instant_arg, default=None, metavar="ISO8601")
    p.add_argument("--to", dest="to_time", type=_instant_arg, default=None, metavar="ISO8601")
    p.add_argument(
        "--hashtag", action="append", default=None, metavar="TAG",
        help="required hashtag (repeatable; any match keeps the message)",
    )
    p.add_argument("--bbox", type=_bbox_arg, default=None, metavar="LAT1,LON1,LAT2,LON2")
    p.add_argument(
        "--origin", type=_instant_arg, default=None, metavar="ISO8601",
        help="window grid origin (default: first message, truncated to the interval)",
    )
    p.add_argument("--out", required=True, help="output directory")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="crowdmon", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="batch analysis of a message file")
    _add_analysis_args(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_replay = sub.add_parser("replay", help="windowed analysis streamed to stdout")
    _add_analysis_args(p_replay)
    p_replay.add_argument(
        "--pace", type=_pace_arg, default="0",
        help="0 (as fast as possible), realtime (one interval per window), or <N>ms",
    )
    p_replay.set_defaults(func=cmd_replay)

    p_gen = sub.add_parser("generate", help="synthesize a seeded message stream")
    p_gen.add_argument("--lexicon", required=True, help="emotion lexicon file (TSV)")
    p_gen.add_argument("--schedule", required=True, help="JSON schedule of phases")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--interval-minutes", type=int, default=15, metavar="N")
    p_gen.add_argument("--origin", type=_instant_arg, default=None, metavar="ISO8601")
    p_gen.add_argument("--out", required=True, help="output directory")
    p_gen.set_defaults(func=cmd_generate)

    return parser


def _build_filter(ns) -> EventFilter:
    hashtags = frozenset(ns.hashtag) if ns.hashtag else None
    return EventFilter(start=ns.from_time, end=ns.to_time, hashtags=hashtags, bbox=ns.bbox)


def _run_pipeline(ns) -> RunReport:
    config = AnalysisConfig(
        interval_minutes=ns.interval_minutes,
        z_threshold=ns.z_threshold,
        ma_window=ns.ma_window,
        min_classified=ns.min_classified,
    )
    lexicon = load_lexicon(ns.lexicon)
    stats = ParseStats()
    messages = list(apply_filter(parse_stream(ns.input, ns.format, stats), _build_filter(ns)))
    records = analyze_messages(lexicon, messages, config, ns.origin)
    return RunReport(
        config=config,
        origin=ns.origin.isoformat() if ns.origin else None,
        records=records,
        n_messages=len(messages),
        n_skipped=stats.skipped,
    )


def _write_sidecars(report: RunReport, out_dir: Path) -> None:
    with open(out_dir / "alerts.jsonl", "w", encoding="utf-8") as fh:
        write_alerts(report.records, fh)
    with open(out_dir / "summary.json", "w", encoding="utf-8") as fh:
        write_summary(report, fh)


def _exit_code(report: RunReport) -> int:
    return EXIT_ALERT if report.alerts else EXIT_OK


def cmd_analyze(ns) -> int:
    report = _run_pipeline(ns)
    out_dir = Path(ns.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "timeseries.csv", "w", encoding="utf-8", newline="") as fh:
        writer = TimeseriesWriter(fh)
        for record in report.records:
            writer.write(record)
    _write_sidecars(report, out_dir)
    print(
        f"messages: {report.n_messages} "
        f"(classified {report.n_classified}, skipped records {report.n_skipped})"
    )
    print(f"windows: {len(report.records)}, danger alerts: {len(report.alerts)}")
    for record in report.alerts:
        groups = ",".join(g.label for g in sorted(record.inference.groups, key=lambda g: g.value))
        print(f"  alert window {record.stats.index} @ {record.stats.start.isoformat()}: {groups}")
    print(f"wrote {out_dir / 'timeseries.csv'}, {out_dir / 'alerts.jsonl'}, {out_dir / 'summary.json'}")
    return _exit_code(report)


def _pace_seconds(pace: str, config: AnalysisConfig) -> float:
    if pace == "realtime":
        return config.interval.total_seconds()
    if pace.endswith("ms"):
        return int(pace[:-2]) / 1000.0
    return 0.0


def cmd_replay(ns) -> int:
    report = _run_pipeline(ns)
    delay = _pace_seconds(ns.pace, report.config)
    out_dir = Path(ns.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    echo = TimeseriesWriter(sys.stdout)
    with open(out_dir / "timeseries.csv", "w", encoding="utf-8", newline="") as fh:
        writer = TimeseriesWriter(fh)
        for record in report.records:
            writer.write(record)
            writer.flush()  # an interrupted replay leaves a valid prefix on disk
            echo.write(record)
            echo.flush()
            if delay > 0:
                time.sleep(delay)
    _write_sidecars(report, out_dir)
    print(f"replayed {len(report.records)} windows, danger alerts: {len(report.alerts)}", file=sys.stderr)
    return _exit_code(report)


def cmd_generate(ns) -> int:
    lexicon = load_lexicon(ns.lexicon)
    schedule = load_schedule(ns.schedule)
    origin = ns.origin if ns.origin is not None else DEFAULT_ORIGIN
    messages, truths = generate_messages(
        schedule, lexicon, ns.seed, interval_minutes=ns.interval_minutes, origin=origin
    )
    out_dir = Path(ns.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "stream.jsonl", "w", encoding="utf-8") as fh:
        write_message_stream(messages, fh)
    with open(out_dir / "truth.jsonl", "w", encoding="utf-8") as fh:
        write_ground_truth(truths, fh)
    print(
        f"generated {len(messages)} messages over {schedule.total_windows} windows "
        f"-> {out_dir / 'stream.jsonl'}"
    )
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except (LexiconError, StreamFormatError, InfeasibleScheduleError, ValueError, OSError) as exc:
        print(f"crowdmon: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
