"""Classic evalb semantics: parameter-file-driven filtering and positional
pair scoring with skip/error statuses."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

from .constituents import Constituent, ConstituentSet
from .scoring import SentenceScore, Status, count_crossing, count_matched
from .treebank import TOP_LABEL, SyntaxTree, TokenLeaf, leaves

_INT_KEYS = ("LABELED", "CUTOFF_LEN", "MAX_ERROR", "DEBUG")


class PrmParseError(ValueError):
    """Bad parameter file; message carries the line number."""


class TooManyErrors(RuntimeError):
    """Raised when ERROR rows exceed MAX_ERROR; partial scores attached."""

    def __init__(self, message: str, scores: list[SentenceScore]):
        super().__init__(message)
        self.scores = scores


@dataclass
class ParamSet:
    """Configuration mirroring evalb's ``.prm`` files."""

    delete_labels: frozenset[str] = frozenset()
    delete_labels_for_length: frozenset[str] = frozenset()
    eq_labels: dict[str, str] = field(default_factory=dict)
    eq_words: dict[str, str] = field(default_factory=dict)
    labeled: bool = True
    cutoff_len: int = 40
    max_error: int = 10


def default_params() -> ParamSet:
    """The stock configuration: drop the root wrapper, traces, and
    punctuation tags; treat ADVP and PRT as one label."""
    return ParamSet(
        delete_labels=frozenset({"TOP", "-NONE-", ",", ":", "``", "''", "."}),
        delete_labels_for_length=frozenset({"-NONE-"}),
        eq_labels={"PRT": "ADVP"},
    )


def parse_prm(text: str) -> ParamSet:
    """Parse ``KEY value...`` lines into a :class:`ParamSet`.

    Unknown keys warn and are skipped; ``#`` comments and blank lines are
    ignored.  ``DEBUG`` is accepted but has no effect.
    """
    delete_labels: set[str] = set()
    delete_for_length: set[str] = set()
    eq_labels: dict[str, str] = {}
    eq_words: dict[str, str] = {}
    ints = {"LABELED": 1, "CUTOFF_LEN": 40, "MAX_ERROR": 10}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        values = rest.split()
        if key in _INT_KEYS:
            if len(values) != 1 or not _is_int(values[0]):
                raise PrmParseError(f"line {lineno}: {key} requires one integer")
            if key != "DEBUG":
                ints[key] = int(values[0])
        elif key == "DELETE_LABEL":
            _expect(values, 1, key, lineno)
            delete_labels.add(values[0])
        elif key == "DELETE_LABEL_FOR_LENGTH":
            _expect(values, 1, key, lineno)
            delete_for_length.add(values[0])
        elif key == "EQ_LABEL":
            _expect(values, 2, key, lineno)
            eq_labels[values[1]] = values[0]
        elif key == "EQ_WORD":
            _expect(values, 2, key, lineno)
            eq_words[values[1]] = values[0]
        else:
            warnings.warn(f"line {lineno}: ignoring unrecognized key {key!r}", stacklevel=2)
    return ParamSet(
        delete_labels=frozenset(delete_labels),
        delete_labels_for_length=frozenset(delete_for_length),
        eq_labels=eq_labels,
        eq_words=eq_words,
        labeled=bool(ints["LABELED"]),
        cutoff_len=ints["CUTOFF_LEN"],
        max_error=ints["MAX_ERROR"],
    )


def _expect(values: list[str], n: int, key: str, lineno: int) -> None:
    if len(values) != n:
        raise PrmParseError(f"line {lineno}: {key} requires {n} value(s)")


def _is_int(s: str) -> bool:
    try:
        int(s)
    except ValueError:
        return False
    return True


def strip_functional(label: str) -> str:
    """Drop functional annotation after ``-`` or ``=`` (``NP-SBJ`` to
    ``NP``); labels that begin with ``-`` (like ``-NONE-``) stay whole."""
    if label.startswith("-"):
        return label
    cut = len(label)
    for sep in "-=":
        idx = label.find(sep)
        if idx != -1:
            cut = min(cut, idx)
    return label[:cut]


def canonical_label(label: str, params: ParamSet) -> str:
    stripped = strip_functional(label)
    return params.eq_labels.get(stripped, stripped)


def canonical_word(word: str, params: ParamSet) -> str:
    return params.eq_words.get(word, word)


def apply_param_filters(
    tree: SyntaxTree, params: ParamSet
) -> tuple[list[TokenLeaf], ConstituentSet]:
    """Delete configured leaves and brackets, then recompute constituents.

    A preterminal is removed (word and all) when its canonical tag, or its
    canonicalized word, is in the delete set; a phrase bracket with a
    deleted label keeps its children.  Surviving leaves are reindexed and
    emptied phrases vanish.  The root wrapper never yields a constituent.
    """
    kept: list[TokenLeaf] = []
    out: list[Constituent | None] = []

    def walk(node: SyntaxTree, at_root: bool) -> None:
        if node.is_preterminal:
            tag = canonical_label(node.label, params)
            if tag in params.delete_labels:
                return
            if canonical_word(node.word, params) in params.delete_labels:
                return
            kept.append(TokenLeaf(node.word, tag, len(kept)))
            return
        label = canonical_label(node.label, params)
        slot = len(out)
        out.append(None)
        start = len(kept)
        for child in node.children:
            walk(child, False)
        end = len(kept)
        if (
            start < end
            and label not in params.delete_labels
            and not (at_root and node.label == TOP_LABEL)
        ):
            out[slot] = Constituent(
                label, start, end, tuple(lf.form for lf in kept[start:end])
            )

    walk(tree, True)
    return kept, [c for c in out if c is not None]


def sentence_length(tree: SyntaxTree, params: ParamSet) -> int:
    """Token count for the length column and the cutoff, ignoring only the
    labels configured for length (traces, by default)."""
    return sum(
        1
        for leaf in leaves(tree)
        if canonical_label(leaf.tag, params) not in params.delete_labels_for_length
    )


def legacy_score_pair(
    gold: SyntaxTree, sys_tree: SyntaxTree, params: ParamSet, pair_id: int = 1
) -> SentenceScore:
    """Score one positional gold/system tree pair, evalb style.

    After filtering, differing token counts give a Length-unmatch ERROR
    and differing forms a Words-unmatch ERROR, both with zeroed metrics.
    Unlabeled mode compares spans only.
    """
    length = sentence_length(gold, params)
    gold_leaves, gold_set = apply_param_filters(gold, params)
    sys_leaves, sys_set = apply_param_filters(sys_tree, params)
    if len(gold_leaves) != len(sys_leaves):
        return _error_row(pair_id, length)
    for g, s in zip(gold_leaves, sys_leaves):
        if canonical_word(g.form, params) != canonical_word(s.form, params):
            return _error_row(pair_id, length)
    if not params.labeled:
        gold_set = [Constituent("*", c.start, c.end, c.tokens) for c in gold_set]
        sys_set = [Constituent("*", c.start, c.end, c.tokens) for c in sys_set]
    matched = count_matched(gold_set, sys_set)
    words = len(gold_leaves)
    correct = sum(1 for g, s in zip(gold_leaves, sys_leaves) if g.tag == s.tag)
    return SentenceScore(
        id=pair_id,
        length=length,
        status=Status.OK,
        recall=100.0 * matched / len(gold_set) if gold_set else 100.0,
        precision=100.0 * matched / len(sys_set) if sys_set else 100.0,
        matched=matched,
        gold_brackets=len(gold_set),
        test_brackets=len(sys_set),
        crossing=count_crossing(gold_set, sys_set),
        words=words,
        correct_tags=correct,
        tag_accuracy=100.0 * correct / words if words else 0.0,
    )


def _error_row(pair_id: int, length: int) -> SentenceScore:
    return SentenceScore(
        id=pair_id,
        length=length,
        status=Status.ERROR,
        recall=0.0,
        precision=0.0,
        matched=0,
        gold_brackets=0,
        test_brackets=0,
        crossing=0,
        words=0,
        correct_tags=0,
        tag_accuracy=0.0,
    )


def legacy_score_files(
    gold_trees: Sequence[SyntaxTree],
    sys_trees: Sequence[SyntaxTree],
    params: ParamSet,
) -> list[SentenceScore]:
    """Score files line by line; no alignment is performed.

    Raises :class:`TooManyErrors` once ERROR rows exceed ``max_error``
    (rows scored so far, including the offending one, are attached).
    """
    if len(gold_trees) != len(sys_trees):
        raise ValueError(
            f"gold file has {len(gold_trees)} trees but system file has "
            f"{len(sys_trees)}; legacy mode pairs them by position"
        )
    scores: list[SentenceScore] = []
    errors = 0
    for k, (g, s) in enumerate(zip(gold_trees, sys_trees), start=1):
        row = legacy_score_pair(g, s, params, pair_id=k)
        scores.append(row)
        if row.status == Status.ERROR:
            errors += 1
            if errors > params.max_error:
                raise TooManyErrors(
                    f"too many errors: {errors} > MAX_ERROR {params.max_error}",
                    scores,
                )
    return scores
