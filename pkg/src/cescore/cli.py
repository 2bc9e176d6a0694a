"""Command-line interface: single-pair scoring, batch scoring, benchmarks.

Exit codes: 0 success, 1 usage/configuration error, 2 data error (unreadable
or invalid files, unscorable single pair).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CEScoreError, ConfigError, LexiconUnavailable
from .evaluation import evaluate, load_dataset, write_scatter_data
from .grammar import GrammarConfig
from .lexicon import load_lexicon, resolve_lexicon_paths
from .scorer import Config, ce_score, score_records
from .simplicity import SimplicityConfig

__all__ = ["main", "run"]

_AGGREGATION_FLAGS = {"max": "max_per_candidate", "literal": "literal_double_sum"}

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; we reserve 2 for data."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    lex = common.add_argument_group("lexicons")
    lex.add_argument("--freq-lexicon", metavar="PATH",
                     help="TSV word/zipf file (default: $CESCORE_FREQ_LEXICON)")
    lex.add_argument("--familiarity-lexicon", metavar="PATH",
                     help="TSV word/percent_known file (default: $CESCORE_FAMILIARITY_LEXICON)")
    knobs = common.add_argument_group("metric constants")
    knobs.add_argument("--tau", type=float, default=0.22, help="length sigmoid steepness")
    knobs.add_argument("--omega", type=float, default=13.0, help="length sigmoid midpoint (tokens)")
    knobs.add_argument("--alpha", type=float, default=0.45, help="lexical simplicity weight")
    knobs.add_argument("--beta", type=float, default=0.55, help="structural simplicity weight")
    knobs.add_argument("--n-min", type=int, default=4, help="smallest n-gram size")
    knobs.add_argument("--n-max", type=int, default=7, help="largest n-gram size")
    knobs.add_argument("--aggregation", choices=sorted(_AGGREGATION_FLAGS), default="max",
                       help="semi-match aggregation mode")
    out = common.add_argument_group("output")
    out.add_argument("--format", choices=("json", "tsv"), default="json")
    out.add_argument("--jobs", type=int, default=1, help="parallel scoring threads")

    parser = _Parser(prog="cescore",
                     description="Reference-less quality scores for split-and-rephrase output.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("score", parents=[common], help="score one (complex, simplified) pair")
    p.add_argument("--complex", required=True, help="the original complex text")
    p.add_argument("--simple", required=True, help="the simplified output text")

    p = sub.add_parser("batch", parents=[common], help="score line-delimited JSON records")
    p.add_argument("--input", required=True, metavar="PATH",
                   help="JSONL of {id, complex, simple}; '-' for stdin")
    p.add_argument("--output", metavar="PATH", help="write results here instead of stdout")

    p = sub.add_parser("evaluate", parents=[common],
                       help="correlate scores with human judgments in a benchmark file")
    p.add_argument("--dataset", required=True, metavar="PATH", help="JSONL of benchmark records")
    p.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--scatter-dir", metavar="DIR",
                   help="also write per-criterion (metric, human) TSV pairs")

    sub.add_parser("lexicon-check", parents=[common],
                   help="load the lexicons and print summary statistics")
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        cfg = Config(
            simplicity=SimplicityConfig(tau=args.tau, omega=args.omega,
                                        alpha=args.alpha, beta=args.beta),
            grammar=GrammarConfig(n_min=args.n_min, n_max=args.n_max,
                                  aggregation=_AGGREGATION_FLAGS[args.aggregation]),
        )
        freq_path, familiarity_path = resolve_lexicon_paths(
            args.freq_lexicon, args.familiarity_lexicon
        )
    except (ConfigError, LexiconUnavailable) as exc:
        print(f"cescore: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        lexicon = load_lexicon(freq_path, familiarity_path)
    except (FileNotFoundError, OSError, CEScoreError) as exc:
        print(f"cescore: {exc}", file=sys.stderr)
        return EXIT_DATA

    handler = {
        "score": _cmd_score,
        "batch": _cmd_batch,
        "evaluate": _cmd_evaluate,
        "lexicon-check": _cmd_lexicon_check,
    }[args.command]
    return handler(args, lexicon, cfg)


def run():
    """Console-script entry point."""
    raise SystemExit(main())


def _cmd_score(args, lexicon, cfg) -> int:
    try:
        bundle = ce_score(args.complex, args.simple, lexicon, cfg)
    except CEScoreError as exc:
        print(json.dumps({"error": type(exc).__name__}))
        return EXIT_DATA
    if args.format == "tsv":
        print("s_score\tm_score\tg_score\tce_score")
        print(_tsv_scores(bundle))
    else:
        print(_json_scores(bundle))
    return EXIT_OK


def _cmd_batch(args, lexicon, cfg) -> int:
    try:
        if args.input == "-":
            lines = sys.stdin.readlines()
        else:
            with open(args.input, encoding="utf-8") as handle:
                lines = handle.readlines()
    except OSError as exc:
        print(f"cescore: {exc}", file=sys.stderr)
        return EXIT_DATA

    parsed = [_parse_batch_line(line) for line in lines]
    valid = [(i, c, s) for i, (_, c, s, err) in enumerate(parsed) if err is None]
    outcomes = dict(score_records(valid, lexicon, cfg, jobs=args.jobs))

    out_lines = []
    scored = failed = 0
    for i, (record_id, _, _, err) in enumerate(parsed):
        outcome = err if err is not None else outcomes[i]
        if isinstance(outcome, Exception):
            out_lines.append(_format_batch_error(record_id, outcome, args.format))
            failed += 1
        else:
            out_lines.append(_format_batch_scores(record_id, outcome, args.format))
            scored += 1

    if args.format == "tsv":
        out_lines.insert(0, "id\ts_score\tm_score\tg_score\tce_score\terror")
    text = "\n".join(out_lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    print(f"cescore: scored {scored} failed {failed}", file=sys.stderr)
    return EXIT_OK


def _cmd_evaluate(args, lexicon, cfg) -> int:
    try:
        dataset = load_dataset(args.dataset)
        report = evaluate(dataset, lexicon, cfg, jobs=args.jobs)
    except (FileNotFoundError, OSError, CEScoreError) as exc:
        print(f"cescore: {exc}", file=sys.stderr)
        return EXIT_DATA
    if args.scatter_dir:
        write_scatter_data(report, args.scatter_dir)
    if args.format == "tsv":
        text = _report_tsv(report)
    else:
        text = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_lexicon_check(args, lexicon, cfg) -> int:
    zipfs = [entry.zipf for entry in lexicon.entries.values()]
    summary = {
        "entries": len(lexicon),
        "default_percent_known": round(lexicon.default_percent_known, 6),
        "zipf_min": min(zipfs),
        "zipf_max": max(zipfs),
    }
    if args.format == "tsv":
        print("\t".join(summary))
        print("\t".join(str(summary[key]) for key in summary))
    else:
        print(json.dumps(summary, sort_keys=True))
    return EXIT_OK


def _parse_batch_line(line: str):
    """Parse one batch input line into (id, complex, simple, error)."""
    try:
        raw = json.loads(line)
    except json.JSONDecodeError as exc:
        return None, None, None, ValueError(f"invalid JSON: {exc.msg}")
    if not isinstance(raw, dict):
        return None, None, None, ValueError("record must be a JSON object")
    record_id = raw.get("id")
    for name in ("complex", "simple"):
        if not isinstance(raw.get(name), str):
            return record_id, None, None, ValueError(f"missing or non-string field {name!r}")
    return record_id, raw["complex"], raw["simple"], None


def _json_scores(bundle) -> str:
    return (
        '{"s_score": %.6f, "m_score": %.6f, "g_score": %.6f, "ce_score": %.6f}'
        % (bundle.s_score, bundle.m_score, bundle.g_score, bundle.ce_score)
    )


def _tsv_scores(bundle) -> str:
    return "%.6f\t%.6f\t%.6f\t%.6f" % (
        bundle.s_score, bundle.m_score, bundle.g_score, bundle.ce_score,
    )


def _format_batch_scores(record_id, bundle, fmt) -> str:
    if fmt == "tsv":
        return "%s\t%s\t" % (_tsv_id(record_id), _tsv_scores(bundle))
    return '{"id": %s, "s_score": %.6f, "m_score": %.6f, "g_score": %.6f, "ce_score": %.6f}' % (
        json.dumps(record_id), bundle.s_score, bundle.m_score, bundle.g_score, bundle.ce_score,
    )


def _format_batch_error(record_id, exc, fmt) -> str:
    name = type(exc).__name__ if isinstance(exc, CEScoreError) else "MalformedRecord"
    if fmt == "tsv":
        return "%s\t\t\t\t\t%s" % (_tsv_id(record_id), name)
    return '{"id": %s, "error": %s}' % (json.dumps(record_id), json.dumps(name))


def _tsv_id(record_id) -> str:
    return "" if record_id is None else str(record_id)


def _report_tsv(report) -> str:
    rows = ["level\tcriterion\tpearson\tpearson_p\tspearman\tspearman_p\tn"]
    for level_name, level in (("sentence", report.sentence_level), ("model", report.model_level)):
        for criterion, cell in level.items():
            if isinstance(cell, str):
                rows.append(f"{level_name}\t{criterion}\t\t\t\t\t0")
            else:
                rows.append(
                    "%s\t%s\t%r\t%r\t%r\t%r\t%d"
                    % (level_name, criterion, cell.pearson, cell.pearson_p,
                       cell.spearman, cell.spearman_p, cell.n)
                )
    return "\n".join(rows) + "\n"


if __name__ == "__main__":
    run()
