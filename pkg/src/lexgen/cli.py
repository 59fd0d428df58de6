"""Command-line entry point: learn strategies, generate words, evaluate.

Exit codes: 0 success, 1 usage error, 2 input error (missing or malformed
file).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from lexgen.comparison import CompareConfig
from lexgen.evaluation import precision, strategy_table
from lexgen.generation import GenerationOptions, run_pipeline
from lexgen.induction import accumulate, extract_strategies
from lexgen.lexio import LexiconParseError, parse_lexicon, write_words

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2


class _InputError(Exception):
    pass


class _UsageError(Exception):
    pass


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {value}")
    return number


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lexicon", required=True, help="tagged lexicon file (form,TAG per line)")
    parser.add_argument("--min-anchor", type=_positive, default=2,
                        help="shared prefix/suffix length required to compare a pair (default 2)")
    parser.add_argument("--min-word-len", type=_positive, default=3,
                        help="minimum form length for comparison (default 3)")
    parser.add_argument("--min-support", type=_positive, default=3,
                        help="witness pairs required to keep a strategy (default 3)")
    parser.add_argument("--allow-conversion", action="store_true",
                        help="compare identical forms bearing different tags")
    parser.add_argument("--lowercase", action="store_true",
                        help="lowercase forms on input")
    parser.add_argument("--jobs", type=_positive, default=1,
                        help="worker processes for the all-pairs sweep")
    parser.add_argument("--out-strategies", metavar="PATH",
                        help="write the strategy table (TSV) here")
    parser.add_argument("--format", choices=("text", "structured"),
                        default="text", help="report format (default text)")


def _add_generation(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--blocking", action="store_true",
                        help="suppress candidates whose source paradigm has their category")
    parser.add_argument("--cycles", type=_positive, default=1,
                        help="generation cycles (default 1)")
    parser.add_argument("--reapply-only", action="store_true",
                        help="later cycles reuse cycle-1 strategies")
    parser.add_argument("--out-words", metavar="PATH",
                        help="write the new-words list here")
    parser.add_argument("--out-blocked", metavar="PATH",
                        help="write blocked candidates here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexgen",
        description="Learn word-formation strategies from a tagged lexicon "
                    "and generate new words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    learn = sub.add_parser("learn", help="induce strategies and dump the table")
    _add_common(learn)

    gen = sub.add_parser("generate", help="learn, then generate new words")
    _add_common(gen)
    _add_generation(gen)

    ev = sub.add_parser("eval", help="generate, then measure precision")
    _add_common(ev)
    _add_generation(ev)
    ev.add_argument("--reference", required=True, metavar="PATH",
                    help="reference word list, one bare form per line")
    ev.add_argument("--match-tags", action="store_true",
                    help="reference entries are form,TAG rather than bare forms")

    return parser


def _read_text(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise _InputError(f"no such file: {path}")
    try:
        return p.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise _InputError(f"not valid UTF-8: {path} ({exc})") from exc


def _write_text(path: str, content: str) -> None:
    if content and not content.endswith("\n"):
        content += "\n"
    Path(path).write_text(content, encoding="utf-8")


def _check_distinct_paths(args) -> None:
    paths = [getattr(args, name, None)
             for name in ("out_words", "out_blocked", "out_strategies")]
    paths = [p for p in paths if p]
    if len(paths) != len(set(paths)):
        raise _UsageError("output paths must be distinct")


def _load(args):
    cfg = CompareConfig(
        min_anchor=args.min_anchor,
        min_word_len=args.min_word_len,
        allow_conversion=args.allow_conversion,
        lowercase=args.lowercase,
    )
    text = _read_text(args.lexicon)
    try:
        lex = parse_lexicon(text, lowercase=args.lowercase)
    except LexiconParseError as exc:
        raise _InputError(f"{args.lexicon}: {exc}") from exc
    return lex, cfg


def _emit_strategies(args, strategies, lex, out) -> None:
    table = strategy_table(strategies, lex)
    if args.out_strategies:
        _write_text(args.out_strategies, table)
    else:
        print(table, file=out)


def _report_payload(report, strategies):
    return {
        "generated": len(report.new_words),
        "new_words": [w.render() for w in report.new_words],
        "regenerated": report.regenerated_count,
        "blocked": [[c.render(), w.render()] for c, w in report.blocked],
        "per_strategy_counts": {str(k): v
                                for k, v in sorted(report.per_strategy_counts.items())},
        "strategies": len(strategies),
    }


def _run_generate(args, out, reference=None, match_tags=False) -> None:
    lex, cfg = _load(args)
    opts = GenerationOptions(blocking=args.blocking, cycles=args.cycles,
                             reapply_only=args.reapply_only)
    report, strategies = run_pipeline(lex, cfg, opts, args.min_support,
                                      jobs=args.jobs)
    if args.out_strategies:
        _write_text(args.out_strategies, strategy_table(strategies, lex))
    words_doc = write_words(report.new_words)
    if args.out_words:
        _write_text(args.out_words, words_doc)
    if args.out_blocked:
        _write_text(args.out_blocked,
                    write_words([c for c, _w in report.blocked]))

    payload = _report_payload(report, strategies)
    prec = None
    if reference is not None:
        prec = precision(report.new_words, reference, match_tags=match_tags)
        payload["precision"] = {
            "generated": prec.generated,
            "attested": prec.attested,
            "precision": prec.precision,
            "unattested_sample": list(prec.unattested_sample),
        }

    if args.format == "structured":
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False), file=out)
        return
    print(f"strategies: {payload['strategies']}", file=out)
    print(f"generated: {payload['generated']}", file=out)
    print(f"regenerated: {payload['regenerated']}", file=out)
    print(f"blocked: {len(report.blocked)}", file=out)
    if prec is not None:
        if prec.precision is None:
            print("precision: undefined (no new words)", file=out)
        else:
            print(f"precision: {prec.precision:.4f} "
                  f"({prec.attested}/{prec.generated})", file=out)
    if not args.out_words and words_doc:
        print(words_doc, file=out)


def run(argv, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        _check_distinct_paths(args)
        if args.command == "learn":
            lex, cfg = _load(args)
            records = accumulate(lex, cfg, jobs=args.jobs)
            strategies = extract_strategies(records, args.min_support)
            _emit_strategies(args, strategies, lex, out)
        elif args.command == "generate":
            _run_generate(args, out)
        else:  # eval
            reference = frozenset(
                line.strip() for line in _read_text(args.reference).splitlines()
                if line.strip()
            )
            _run_generate(args, out, reference=reference,
                          match_tags=args.match_tags)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))
