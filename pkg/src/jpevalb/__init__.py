"""Alignment-based PARSEVAL scorer with a classic-evalb legacy mode."""

from .alignment import (
    AlignmentInputError,
    AlignmentUnit,
    SimilarityConfig,
    align_sentences,
    align_sequences,
    align_words,
    edit_distance,
    load_exception_list,
    normalize_nospace,
    similar,
)
from .constituents import (
    Constituent,
    ConstituentSet,
    DUMMY_ROOT_LABEL,
    extract_constituents,
    merge_with_dummy_root,
    remap_to_alignment_units,
)
from .legacy import (
    ParamSet,
    PrmParseError,
    TooManyErrors,
    apply_param_filters,
    default_params,
    legacy_score_files,
    legacy_score_pair,
    parse_prm,
)
from .scoring import (
    CorpusSummary,
    SentenceScore,
    Status,
    SummaryBlock,
    count_crossing,
    count_matched,
    score_group,
    summarize,
    tag_accuracy,
)
from .treebank import (
    SyntaxTree,
    TokenLeaf,
    TreebankParseError,
    leaves,
    load_trees,
    parse_bracketed,
    render_bracketed,
)

__version__ = "0.1.0"

__all__ = [
    "AlignmentInputError",
    "AlignmentUnit",
    "Constituent",
    "ConstituentSet",
    "CorpusSummary",
    "DUMMY_ROOT_LABEL",
    "ParamSet",
    "PrmParseError",
    "SentenceScore",
    "SimilarityConfig",
    "Status",
    "SummaryBlock",
    "SyntaxTree",
    "TokenLeaf",
    "TooManyErrors",
    "TreebankParseError",
    "align_sentences",
    "align_sequences",
    "align_words",
    "apply_param_filters",
    "count_crossing",
    "count_matched",
    "default_params",
    "edit_distance",
    "extract_constituents",
    "leaves",
    "legacy_score_files",
    "legacy_score_pair",
    "load_exception_list",
    "load_trees",
    "merge_with_dummy_root",
    "normalize_nospace",
    "parse_bracketed",
    "parse_prm",
    "remap_to_alignment_units",
    "render_bracketed",
    "score_group",
    "similar",
    "summarize",
    "tag_accuracy",
]
