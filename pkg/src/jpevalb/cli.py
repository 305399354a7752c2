"""Command-line entry point and evalb-compatible report formatting."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Sequence, TextIO

from .alignment import (
    AlignmentInputError,
    SimilarityConfig,
    align_sentences,
    load_exception_list,
)
from .legacy import (
    PrmParseError,
    TooManyErrors,
    default_params,
    legacy_score_files,
    parse_prm,
)
from .scoring import (
    DEFAULT_CUTOFF_LEN,
    CorpusSummary,
    SentenceScore,
    SummaryBlock,
    score_group,
    summarize,
)
from .treebank import TreebankParseError, leaves, load_trees

# marker for "--evalb given without a parameter file"
USE_DEFAULT_PARAMS = "<default>"

REPORT_HEADER = (
    "  Sent.                        Matched  Bracket   Cross        Correct Tag\n"
    " ID  Len.  Stat. Recal  Prec.  Bracket gold test Bracket Words  Tags Accracy\n"
    "============================================================================"
)


@dataclass
class RunConfig:
    gold_path: str
    system_path: str
    legacy: bool = False
    prm_path: str | None = None
    exception_list_path: str | None = None
    output: TextIO | None = None  # None means current stdout


def _pct(value: float, width: int = 6) -> str:
    """Two-decimal percentage, rounded half up like evalb prints."""
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), ROUND_HALF_UP)).rjust(width)


def format_row(score: SentenceScore) -> str:
    """One fixed-width report row in column order: ID, length, status,
    recall, precision, matched, gold, test, crossing, words, tags, accuracy."""
    return (
        f"{score.id:4d}  {score.length:3d}    {int(score.status)}  "
        f"{_pct(score.recall)} {_pct(score.precision)}  "
        f"{score.matched:4d}   {score.gold_brackets:4d} {score.test_brackets:4d}  "
        f"{score.crossing:4d}   {score.words:4d}  {score.correct_tags:4d}  "
        f"{_pct(score.tag_accuracy)}"
    )


def _format_block(block: SummaryBlock) -> str:
    lines = [
        f"Number of sentence        = {block.sentences:6d}",
        f"Number of Error sentence  = {block.error_sentences:6d}",
        f"Number of Skip  sentence  = {block.skip_sentences:6d}",
        f"Number of Valid sentence  = {block.valid_sentences:6d}",
        f"Bracketing Recall         = {_pct(block.recall)}",
        f"Bracketing Precision      = {_pct(block.precision)}",
        f"Bracketing FMeasure       = {_pct(block.fmeasure)}",
        f"Complete match            = {_pct(block.complete_match)}",
        f"Average crossing          = {_pct(block.avg_crossing)}",
        f"No crossing               = {_pct(block.no_crossing)}",
        f"2 or less crossing        = {_pct(block.two_or_less_crossing)}",
        f"Tagging accuracy          = {_pct(block.tagging_accuracy)}",
    ]
    return "\n".join(lines)


def format_summary(summary: CorpusSummary) -> str:
    return (
        "=== Summary ===\n"
        "\n"
        "-- All --\n"
        f"{_format_block(summary.overall)}\n"
        "\n"
        f"-- len<={summary.cutoff_len} --\n"
        f"{_format_block(summary.within_cutoff)}"
    )


def run(config: RunConfig) -> int:
    """Execute the evaluation described by ``config``.

    Writes the per-sentence table and summary to the configured output;
    returns 0 on success, 1 on any input or processing failure (with a
    diagnostic on stderr and, for a legacy error-limit abort, the rows
    scored so far already written).
    """
    out = config.output if config.output is not None else sys.stdout
    try:
        gold_trees = load_trees(config.gold_path)
        sys_trees = load_trees(config.system_path)
        exceptions = (
            load_exception_list(config.exception_list_path)
            if config.exception_list_path
            else {}
        )
    except (OSError, TreebankParseError, ValueError) as exc:
        print(f"jp-evalb: {exc}", file=sys.stderr)
        return 1

    if config.legacy:
        try:
            params = (
                parse_prm(Path(config.prm_path).read_text(encoding="utf-8"))
                if config.prm_path
                else default_params()
            )
        except (OSError, PrmParseError) as exc:
            print(f"jp-evalb: {exc}", file=sys.stderr)
            return 1
        print(REPORT_HEADER, file=out)
        try:
            scores = legacy_score_files(gold_trees, sys_trees, params)
        except TooManyErrors as exc:
            for score in exc.scores:
                print(format_row(score), file=out)
            print(f"jp-evalb: {exc}", file=sys.stderr)
            return 1
        except ValueError as exc:
            print(f"jp-evalb: {exc}", file=sys.stderr)
            return 1
        cutoff = params.cutoff_len
    else:
        cfg = SimilarityConfig(exception_pairs=exceptions)
        try:
            units = align_sentences(
                [[leaf.form for leaf in leaves(t)] for t in gold_trees],
                [[leaf.form for leaf in leaves(t)] for t in sys_trees],
                cfg,
            )
        except AlignmentInputError as exc:
            print(f"jp-evalb: {exc}", file=sys.stderr)
            return 1
        print(REPORT_HEADER, file=out)
        scores = [
            score_group(
                [gold_trees[k] for k in unit.gold_items],
                [sys_trees[k] for k in unit.sys_items],
                cfg,
                group_id=n,
            )
            for n, unit in enumerate(units, start=1)
        ]
        cutoff = DEFAULT_CUTOFF_LEN

    for score in scores:
        print(format_row(score), file=out)
    print(file=out)
    print(format_summary(summarize(scores, cutoff)), file=out)
    return 0


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jp-evalb",
        description=(
            "PARSEVAL scorer for constituency parsing that tolerates sentence "
            "boundary and tokenization mismatches via alignment"
        ),
    )
    parser.add_argument("gold_file", help="reference treebank (bracketed trees)")
    parser.add_argument("system_parsed_file", help="parser output (bracketed trees)")
    parser.add_argument(
        "-evalb",
        "--evalb",
        dest="evalb",
        nargs="?",
        const=USE_DEFAULT_PARAMS,
        default=None,
        metavar="PRM",
        help=(
            "replicate classic evalb scoring (positional, punctuation "
            "excluded); optionally takes a .prm parameter file"
        ),
    )
    parser.add_argument(
        "--exceptions",
        metavar="FILE",
        help="tab-separated word-equivalence pairs used during word alignment",
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    config = RunConfig(
        gold_path=args.gold_file,
        system_path=args.system_parsed_file,
        legacy=args.evalb is not None,
        prm_path=args.evalb if args.evalb not in (None, USE_DEFAULT_PARAMS) else None,
        exception_list_path=args.exceptions,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
