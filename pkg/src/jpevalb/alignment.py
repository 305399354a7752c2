"""Greedy monolingual alignment of sentences and words.

Gold and system files describe the same text but may disagree on sentence
boundaries and tokenization.  Alignment pairs up groups of items on each
side so that scoring can compare constituents in a shared coordinate
system.  Matching is case-insensitive and ignores all whitespace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence


class AlignmentInputError(ValueError):
    """One side is empty while the other is not."""


@dataclass(frozen=True)
class AlignmentUnit:
    """A paired group of gold-side and system-side item indices.

    Matched pairs are 1-to-1; mismatch accumulation may group several
    items on either side.  Units are ordered and partition both sides.
    """

    gold_items: tuple[int, ...]
    sys_items: tuple[int, ...]

    @property
    def is_one_to_one(self) -> bool:
        return len(self.gold_items) == 1 and len(self.sys_items) == 1


@dataclass
class SimilarityConfig:
    """Knobs for fuzzy matching during alignment.

    ``ratio_threshold`` bounds edit distance over the longer string length;
    ``exception_pairs`` maps normalized word forms that count as equal
    (language-specific contractions and symbol spellings).
    """

    ratio_threshold: float = 0.1
    exception_pairs: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not 0.0 < self.ratio_threshold < 1.0:
            raise ValueError("ratio_threshold must be in (0, 1)")


def normalize_nospace(s: str) -> str:
    """Remove all whitespace and case-fold."""
    return "".join(s.split()).casefold()


def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance with unit-cost insert/delete/substitute."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (ca != cb),
                )
            )
        previous = current
    return previous[-1]


def similar(a: str, b: str, cfg: SimilarityConfig) -> bool:
    """True when the edit-distance ratio over the longer string is below
    the configured threshold.  Expects whitespace-normalized inputs."""
    if a == b:
        return True
    longest = max(len(a), len(b))
    # the distance is at least the length difference
    if abs(len(a) - len(b)) >= cfg.ratio_threshold * longest:
        return False
    return edit_distance(a, b) / longest < cfg.ratio_threshold


def align_sequences(
    left: Sequence,
    right: Sequence,
    matched: Callable[[int, int], bool],
    tiebreak: Callable[[int, int], bool],
    resume: Callable[[int, int], bool] | None = None,
) -> list[AlignmentUnit]:
    """Greedy left-to-right alignment of two sequences.

    While the current pair satisfies ``matched``, emit a 1-to-1 unit.  On a
    mismatch, both current items open a group; further items are pulled
    from the side chosen by ``tiebreak`` (True selects the left side) until
    the pair after the group satisfies ``resume`` on both sides, or both
    sides run out.  ``resume`` defaults to ``matched``; alignment cases
    with lookahead pass a plain-equality check instead, since the lookahead
    case would cut accumulation short at the first equal next pair.

    Trailing items remaining after the main loop are folded into the last
    unit so that units always partition both sequences.
    """
    if (len(left) == 0) != (len(right) == 0):
        raise AlignmentInputError("cannot align an empty sequence with a non-empty one")
    if resume is None:
        resume = matched
    n_left, n_right = len(left), len(right)
    units: list[AlignmentUnit] = []
    i = j = 0
    while i < n_left and j < n_right:
        if matched(i, j):
            units.append(AlignmentUnit((i,), (j,)))
            i += 1
            j += 1
            continue
        group_left = [i]
        group_right = [j]
        while True:
            if i + 1 < n_left and j + 1 < n_right and resume(i + 1, j + 1):
                break
            if i + 1 >= n_left and j + 1 >= n_right:
                break
            if j + 1 >= n_right or (i + 1 < n_left and tiebreak(i, j)):
                i += 1
                group_left.append(i)
            else:
                j += 1
                group_right.append(j)
        units.append(AlignmentUnit(tuple(group_left), tuple(group_right)))
        i += 1
        j += 1
    if units and (i < n_left or j < n_right):
        last = units.pop()
        units.append(
            AlignmentUnit(
                last.gold_items + tuple(range(i, n_left)),
                last.sys_items + tuple(range(j, n_right)),
            )
        )
    return units


def align_sentences(
    gold_sents: Sequence[Sequence[str]],
    sys_sents: Sequence[Sequence[str]],
    cfg: SimilarityConfig,
) -> list[AlignmentUnit]:
    """Align gold sentences to system sentences.

    Sentences are compared by their whitespace-free normalized text: a pair
    matches when equal, or when similar and the following pair is equal or
    similar as well.  At the very end of both files the lookahead is
    vacuously satisfied.  On mismatch, the side whose current sentence is
    shorter accumulates.
    """
    norm_left = ["".join(normalize_nospace(t) for t in sent) for sent in gold_sents]
    norm_right = ["".join(normalize_nospace(t) for t in sent) for sent in sys_sents]
    if (len(norm_left) == 0) != (len(norm_right) == 0):
        raise AlignmentInputError(
            f"gold file has {len(norm_left)} sentences, "
            f"system file has {len(norm_right)}"
        )
    n_left, n_right = len(norm_left), len(norm_right)

    def equal_or_similar(i: int, j: int) -> bool:
        return norm_left[i] == norm_right[j] or similar(norm_left[i], norm_right[j], cfg)

    def matched(i: int, j: int) -> bool:
        if norm_left[i] == norm_right[j]:
            return True
        if not similar(norm_left[i], norm_right[j], cfg):
            return False
        if i + 1 < n_left and j + 1 < n_right:
            return equal_or_similar(i + 1, j + 1)
        # lookahead holds at the end only when both sides finish together
        return i == n_left - 1 and j == n_right - 1

    def tiebreak(i: int, j: int) -> bool:
        return len(norm_left[i]) < len(norm_right[j])

    return align_sequences(norm_left, norm_right, matched, tiebreak, resume=equal_or_similar)


def align_words(
    l: Sequence[str], r: Sequence[str], cfg: SimilarityConfig
) -> list[AlignmentUnit]:
    """Align the word tokens of one aligned sentence group.

    A pair matches when the normalized forms are equal, listed in the
    exception pairs, or unequal with the immediately following pair equal
    (so a lone spelling difference still aligns 1-to-1).  On mismatch the
    side with more remaining character mass accumulates.
    """
    norm_left = [normalize_nospace(t) for t in l]
    norm_right = [normalize_nospace(t) for t in r]
    if (len(norm_left) == 0) != (len(norm_right) == 0):
        raise AlignmentInputError("cannot word-align an empty token list")
    n_left, n_right = len(norm_left), len(norm_right)
    exceptions = cfg.exception_pairs

    def equal(i: int, j: int) -> bool:
        a, b = norm_left[i], norm_right[j]
        return a == b or exceptions.get(a) == b or exceptions.get(b) == a

    def matched(i: int, j: int) -> bool:
        if equal(i, j):
            return True
        if i + 1 < n_left and j + 1 < n_right:
            return equal(i + 1, j + 1)
        return i == n_left - 1 and j == n_right - 1

    # prefix[k] is the character mass of the first k normalized tokens
    prefix_left = _prefix_lengths(norm_left)
    prefix_right = _prefix_lengths(norm_right)

    def tiebreak(i: int, j: int) -> bool:
        remaining_left = prefix_left[-1] - prefix_left[i + 1]
        remaining_right = prefix_right[-1] - prefix_right[j + 1]
        return remaining_left > remaining_right

    return align_sequences(norm_left, norm_right, matched, tiebreak, resume=equal)


def _prefix_lengths(tokens: Sequence[str]) -> list[int]:
    sums = [0]
    for tok in tokens:
        sums.append(sums[-1] + len(tok))
    return sums


def load_exception_list(path) -> dict[str, str]:
    """Read tab-separated word-equivalence pairs, one per line.

    ``#`` starts a comment; both fields are stored whitespace-normalized.
    """
    pairs: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise ValueError(
                    f"{path}:{lineno}: expected two tab-separated fields, "
                    f"got {len(fields)}"
                )
            pairs[normalize_nospace(fields[0])] = normalize_nospace(fields[1])
    return pairs
