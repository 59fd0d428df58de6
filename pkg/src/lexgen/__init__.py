"""Whole-word morphology: learn word-formation strategies from a tagged
lexicon, generate new words, optionally block overgeneration via paradigms."""

from lexgen.lexio import Lexicon, LexiconParseError, TaggedWord, parse_lexicon, write_words
from lexgen.comparison import (
    CompareConfig,
    ComparisonRecord,
    Direction,
    compare_pair,
    select_direction,
    shared_anchor,
)
from lexgen.induction import (
    ParadigmIndex,
    Strategy,
    StrategyKey,
    accumulate,
    build_paradigms,
    canonical_key,
    extract_strategies,
    merge_records,
)
from lexgen.generation import (
    GenerationOptions,
    GenerationReport,
    MatchBinding,
    create,
    generate,
    is_blocked,
    run_cycles,
    unify,
)
from lexgen.evaluation import PrecisionReport, precision, strategy_table

__version__ = "0.1.0"

__all__ = [
    "CompareConfig",
    "ComparisonRecord",
    "Direction",
    "GenerationOptions",
    "GenerationReport",
    "Lexicon",
    "LexiconParseError",
    "MatchBinding",
    "ParadigmIndex",
    "PrecisionReport",
    "Strategy",
    "StrategyKey",
    "TaggedWord",
    "accumulate",
    "build_paradigms",
    "canonical_key",
    "compare_pair",
    "create",
    "extract_strategies",
    "generate",
    "is_blocked",
    "merge_records",
    "parse_lexicon",
    "precision",
    "run_cycles",
    "select_direction",
    "shared_anchor",
    "strategy_table",
    "unify",
    "write_words",
]
