"""PARSEVAL quantities per sentence group and corpus summaries."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import IntEnum
from typing import Sequence

from .alignment import AlignmentUnit, SimilarityConfig, align_words
from .constituents import (
    ConstituentSet,
    extract_constituents,
    merge_with_dummy_root,
    remap_to_alignment_units,
)
from .treebank import SyntaxTree, TokenLeaf, leaves

DEFAULT_CUTOFF_LEN = 40


class Status(IntEnum):
    OK = 0
    SKIP = 1
    ERROR = 2


@dataclass
class SentenceScore:
    """One report row: the twelve per-sentence columns."""

    id: int
    length: int
    status: Status
    recall: float
    precision: float
    matched: int
    gold_brackets: int
    test_brackets: int
    crossing: int
    words: int
    correct_tags: int
    tag_accuracy: float

    @property
    def complete_match(self) -> bool:
        return (
            self.matched == self.gold_brackets == self.test_brackets
            and self.status == Status.OK
        )


def count_matched(gold: ConstituentSet, sys: ConstituentSet) -> int:
    """Matched brackets: multiset intersection on (label, start, end).

    Each gold occurrence pairs with at most one system occurrence; spans
    must already share a coordinate system, which makes the covered token
    groups correspond by construction.
    """
    gold_sig = Counter(c.signature for c in gold)
    sys_sig = Counter(c.signature for c in sys)
    return sum((gold_sig & sys_sig).values())


def count_crossing(gold: ConstituentSet, sys: ConstituentSet) -> int:
    """System constituents that partially overlap some gold span.

    Overlap without containment in either direction; each system
    constituent counts once no matter how many gold spans it crosses.
    """
    gold_spans = {(c.start, c.end) for c in gold}
    crossing = 0
    for c in sys:
        for (gs, ge) in gold_spans:
            if c.start < ge and gs < c.end:  # overlap
                if not (c.start <= gs and ge <= c.end) and not (
                    gs <= c.start and c.end <= ge
                ):
                    crossing += 1
                    break
    return crossing


def tag_accuracy(
    gold_leaves: Sequence[TokenLeaf],
    sys_leaves: Sequence[TokenLeaf],
    units: Sequence[AlignmentUnit],
) -> tuple[int, int, float]:
    """POS accuracy over all gold tokens, punctuation included.

    A gold token is correct only inside a 1-to-1 unit whose system token
    carries an equal tag; tokens grouped by mismatch accumulation count
    as incorrect.
    """
    words = len(gold_leaves)
    correct = 0
    for unit in units:
        if unit.is_one_to_one:
            g = gold_leaves[unit.gold_items[0]]
            s = sys_leaves[unit.sys_items[0]]
            if g.tag == s.tag:
                correct += 1
    accuracy = 100.0 * correct / words if words else 0.0
    return words, correct, accuracy


def score_group(
    gold_trees: Sequence[SyntaxTree],
    sys_trees: Sequence[SyntaxTree],
    cfg: SimilarityConfig,
    group_id: int = 1,
) -> SentenceScore:
    """Score one aligned sentence group through the native pipeline.

    Multi-tree sides merge under the dummy root, words are aligned, and
    constituent sets are compared in alignment-unit coordinates.  The
    reported length is the number of word-alignment units, which equals
    the gold token count whenever no tokens were grouped.
    """
    gold = merge_with_dummy_root(list(gold_trees))
    sys_ = merge_with_dummy_root(list(sys_trees))
    gold_leaves = leaves(gold)
    sys_leaves = leaves(sys_)
    gold_forms = [leaf.form for leaf in gold_leaves]
    sys_forms = [leaf.form for leaf in sys_leaves]
    units = align_words(gold_forms, sys_forms, cfg)
    gold_set = remap_to_alignment_units(
        extract_constituents(gold), units, gold_forms, side="gold"
    )
    sys_set = remap_to_alignment_units(
        extract_constituents(sys_), units, sys_forms, side="sys"
    )
    matched = count_matched(gold_set, sys_set)
    words, correct, accuracy = tag_accuracy(gold_leaves, sys_leaves, units)
    return SentenceScore(
        id=group_id,
        length=len(units),
        status=Status.OK,
        recall=_pct(matched, len(gold_set)),
        precision=_pct(matched, len(sys_set)),
        matched=matched,
        gold_brackets=len(gold_set),
        test_brackets=len(sys_set),
        crossing=count_crossing(gold_set, sys_set),
        words=words,
        correct_tags=correct,
        tag_accuracy=accuracy,
    )


def _pct(numerator: int, denominator: int) -> float:
    # empty reference counts as fully recovered
    return 100.0 * numerator / denominator if denominator else 100.0


@dataclass
class SummaryBlock:
    """Corpus totals and rates over one subset of the report rows."""

    sentences: int = 0
    error_sentences: int = 0
    skip_sentences: int = 0
    valid_sentences: int = 0
    total_matched: int = 0
    total_gold: int = 0
    total_test: int = 0
    total_crossing: int = 0
    total_words: int = 0
    total_correct_tags: int = 0
    recall: float = 0.0
    precision: float = 0.0
    fmeasure: float = 0.0
    complete_match: float = 0.0
    avg_crossing: float = 0.0
    no_crossing: float = 0.0
    two_or_less_crossing: float = 0.0
    tagging_accuracy: float = 0.0


@dataclass
class CorpusSummary:
    overall: SummaryBlock
    within_cutoff: SummaryBlock
    cutoff_len: int


def summarize(scores: Sequence[SentenceScore], cutoff: int = DEFAULT_CUTOFF_LEN) -> CorpusSummary:
    """Micro-averaged corpus summary, plus the block restricted to short
    sentences (length at most ``cutoff``)."""
    return CorpusSummary(
        overall=_summarize_block(scores),
        within_cutoff=_summarize_block([s for s in scores if s.length <= cutoff]),
        cutoff_len=cutoff,
    )


def _summarize_block(rows: Sequence[SentenceScore]) -> SummaryBlock:
    block = SummaryBlock(sentences=len(rows))
    valid = [s for s in rows if s.status == Status.OK]
    block.error_sentences = sum(1 for s in rows if s.status == Status.ERROR)
    block.skip_sentences = sum(1 for s in rows if s.status == Status.SKIP)
    block.valid_sentences = len(valid)
    if not valid:
        return block
    block.total_matched = sum(s.matched for s in valid)
    block.total_gold = sum(s.gold_brackets for s in valid)
    block.total_test = sum(s.test_brackets for s in valid)
    block.total_crossing = sum(s.crossing for s in valid)
    block.total_words = sum(s.words for s in valid)
    block.total_correct_tags = sum(s.correct_tags for s in valid)
    if block.total_gold:
        block.recall = 100.0 * block.total_matched / block.total_gold
    if block.total_test:
        block.precision = 100.0 * block.total_matched / block.total_test
    if block.recall + block.precision > 0:
        block.fmeasure = (
            2 * block.recall * block.precision / (block.recall + block.precision)
        )
    block.complete_match = (
        100.0 * sum(1 for s in valid if s.complete_match) / len(valid)
    )
    block.avg_crossing = block.total_crossing / len(valid)
    block.no_crossing = 100.0 * sum(1 for s in valid if s.crossing == 0) / len(valid)
    block.two_or_less_crossing = (
        100.0 * sum(1 for s in valid if s.crossing <= 2) / len(valid)
    )
    if block.total_words:
        block.tagging_accuracy = (
            100.0 * block.total_correct_tags / block.total_words
        )
    return block
