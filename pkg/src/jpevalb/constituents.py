"""Constituent extraction, dummy-root merging, and span remapping."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .alignment import AlignmentUnit
from .treebank import TOP_LABEL, SyntaxTree

DUMMY_ROOT_LABEL = "@S"

# root-level wrappers that never count as constituents
WRAPPER_LABELS = frozenset({TOP_LABEL, DUMMY_ROOT_LABEL})


@dataclass(frozen=True)
class Constituent:
    """A phrase-level bracket: label plus a half-open token or unit span.

    ``tokens`` holds the covered surface text, one entry per token (raw
    coordinates) or per alignment-unit group (after remapping).
    """

    label: str
    start: int
    end: int
    tokens: tuple[str, ...]

    @property
    def text(self) -> str:
        return " ".join(self.tokens)

    @property
    def signature(self) -> tuple[str, int, int]:
        return (self.label, self.start, self.end)

    def as_tuple(self) -> tuple[str, int, int, str]:
        return (self.label, self.start, self.end, self.text)


# a ConstituentSet is a multiset: duplicate (label, span) entries are
# legitimate (unary chains) and each may be matched at most once
ConstituentSet = list[Constituent]


def merge_with_dummy_root(
    trees: Sequence[SyntaxTree], dummy_label: str = DUMMY_ROOT_LABEL
) -> SyntaxTree:
    """Bundle several trees under one ignorable root; identity for one tree."""
    if not trees:
        raise ValueError("cannot merge zero trees")
    if len(trees) == 1:
        return trees[0]
    return SyntaxTree(dummy_label, tuple(trees))


def extract_constituents(tree: SyntaxTree, offset: int = 0) -> ConstituentSet:
    """Collect phrase-level nodes as (label, start, end, tokens), preorder.

    Preterminals never count; wrapper labels (``TOP`` and the dummy root)
    are skipped.  Spans are token indices shifted by ``offset``.
    """
    out: list[Constituent | None] = []
    forms: list[str] = []

    def walk(node: SyntaxTree) -> tuple[int, int]:
        if node.is_preterminal:
            forms.append(node.word)
            return (len(forms) - 1, len(forms))
        slot = len(out)
        out.append(None)
        start = len(forms)
        for child in node.children:
            walk(child)
        end = len(forms)
        if node.label not in WRAPPER_LABELS:
            out[slot] = Constituent(
                node.label,
                offset + start,
                offset + end,
                tuple(forms[start:end]),
            )
        return (start, end)

    walk(tree)
    return [c for c in out if c is not None]


def remap_to_alignment_units(
    constituents: ConstituentSet,
    units: Sequence[AlignmentUnit],
    forms: Sequence[str],
    side: str = "gold",
) -> ConstituentSet:
    """Convert raw token spans to alignment-unit spans.

    A boundary falling inside a unit widens to the enclosing unit; the
    tokens field becomes the covered unit-level groups (each group joins
    every token of the unit on this side, so a widened constituent shows
    the full group text).
    """
    unit_of: dict[int, int] = {}
    group_texts: list[str] = []
    for k, unit in enumerate(units):
        items = unit.gold_items if side == "gold" else unit.sys_items
        for t in items:
            unit_of[t] = k
        group_texts.append(" ".join(forms[t] for t in items))
    remapped = []
    for c in constituents:
        try:
            unit_start = unit_of[c.start]
            unit_end = unit_of[c.end - 1] + 1
        except KeyError as exc:
            raise ValueError(
                f"token index {exc.args[0]} of {c.label} lies outside every "
                "alignment unit"
            ) from None
        remapped.append(
            Constituent(
                c.label,
                unit_start,
                unit_end,
                tuple(group_texts[unit_start:unit_end]),
            )
        )
    return remapped
