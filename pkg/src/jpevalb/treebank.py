"""Reading and writing Penn-Treebank-style bracketed parse trees."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

TOP_LABEL = "TOP"

_TOKEN_RE = re.compile(r"[()]|[^()\s]+")
# labels and word forms are single whitespace-free atoms; parens would break
# the bracketed format on re-serialization
_ATOM_RE = re.compile(r"[^()\s]+\Z")


class TreebankParseError(ValueError):
    """Malformed bracketed input; ``offset`` is the character position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class SyntaxTree:
    """A node of a labeled ordered tree.

    A node is either a preterminal (``word`` set, no children) or a phrase
    (at least one child, no word).
    """

    label: str
    children: tuple["SyntaxTree", ...] = ()
    word: str | None = None

    def __post_init__(self):
        if (self.word is None) == (not self.children):
            raise ValueError(
                f"node {self.label!r} must have either a word or children"
            )

    @property
    def is_preterminal(self) -> bool:
        return self.word is not None


class TokenLeaf(NamedTuple):
    form: str
    tag: str
    index: int


def parse_bracketed(text: str) -> list[SyntaxTree]:
    """Parse zero or more whitespace-separated bracketed trees.

    An outermost bracket with no label (``( (S ...))``) is preserved as a
    node labeled ``TOP``.  Raises :class:`TreebankParseError` on unbalanced
    brackets, empty labels, or stray material outside trees.
    """
    tokens = [(m.group(), m.start()) for m in _TOKEN_RE.finditer(text)]
    trees: list[SyntaxTree] = []
    pos = 0
    while pos < len(tokens):
        tok, off = tokens[pos]
        if tok != "(":
            raise TreebankParseError(f"unexpected {tok!r} outside any tree", off)
        tree, pos = _parse_node(tokens, pos, len(text), at_root=True)
        trees.append(tree)
    return trees


def _parse_node(
    tokens: list[tuple[str, int]], pos: int, end_offset: int, at_root: bool
) -> tuple[SyntaxTree, int]:
    open_off = tokens[pos][1]
    pos += 1
    if pos >= len(tokens):
        raise TreebankParseError("unclosed bracket at end of input", end_offset)
    tok, off = tokens[pos]
    if tok == "(":
        if not at_root:
            raise TreebankParseError("phrase is missing a label", off)
        label = TOP_LABEL
    elif tok == ")":
        raise TreebankParseError("empty bracket pair", off)
    else:
        label = tok
        pos += 1
        if pos >= len(tokens):
            raise TreebankParseError("unclosed bracket at end of input", end_offset)
        tok, off = tokens[pos]

    if tok == "(":
        children = []
        while pos < len(tokens) and tokens[pos][0] == "(":
            child, pos = _parse_node(tokens, pos, end_offset, at_root=False)
            children.append(child)
        if pos >= len(tokens):
            raise TreebankParseError(
                f"unclosed bracket ({_open_count(tokens, open_off)} unclosed)",
                end_offset,
            )
        if tokens[pos][0] != ")":
            raise TreebankParseError(
                f"unexpected word {tokens[pos][0]!r} after phrase children",
                tokens[pos][1],
            )
        return SyntaxTree(label, tuple(children)), pos + 1
    if tok == ")":
        raise TreebankParseError(f"phrase {label!r} has no content", off)
    # preterminal: one word, then the closing bracket
    word = tok
    pos += 1
    if pos >= len(tokens):
        raise TreebankParseError("unclosed bracket at end of input", end_offset)
    if tokens[pos][0] != ")":
        raise TreebankParseError(
            f"unexpected {tokens[pos][0]!r} after word {word!r}", tokens[pos][1]
        )
    return SyntaxTree(label, word=word), pos + 1


def _open_count(tokens: list[tuple[str, int]], from_offset: int) -> int:
    depth = 0
    for tok, off in tokens:
        if off < from_offset:
            continue
        depth += 1 if tok == "(" else -1 if tok == ")" else 0
    return depth


def iter_preterminals(tree: SyntaxTree) -> Iterator[SyntaxTree]:
    if tree.is_preterminal:
        yield tree
    else:
        for child in tree.children:
            yield from iter_preterminals(child)


def leaves(tree: SyntaxTree) -> list[TokenLeaf]:
    """Left-to-right word tokens of ``tree`` as (form, tag, index)."""
    return [
        TokenLeaf(node.word, node.label, i)
        for i, node in enumerate(iter_preterminals(tree))
    ]


def render_bracketed(tree: SyntaxTree) -> str:
    """Single-line bracketed form; inverse of :func:`parse_bracketed`."""
    parts: list[str] = []
    _render(tree, parts)
    return "".join(parts)


def _render(node: SyntaxTree, parts: list[str]) -> None:
    if not _ATOM_RE.match(node.label):
        raise ValueError(f"label {node.label!r} contains whitespace or parentheses")
    if node.is_preterminal:
        if not _ATOM_RE.match(node.word):
            raise ValueError(f"word {node.word!r} contains whitespace or parentheses")
        parts.append(f"({node.label} {node.word})")
        return
    parts.append(f"({node.label}")
    for child in node.children:
        parts.append(" ")
        _render(child, parts)
    parts.append(")")


def load_trees(path) -> list[SyntaxTree]:
    """Parse every tree in a UTF-8 file of bracketed trees."""
    with open(path, encoding="utf-8") as handle:
        return parse_bracketed(handle.read())
