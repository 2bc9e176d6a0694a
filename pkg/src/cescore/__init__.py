"""Reference-less quality metrics for split-and-rephrase output.

Given a complex source text and its simplified rewrite, the package scores
the pair on simplicity (s_score), meaning preservation (m_score), and
grammaticality (g_score), and combines them into an overall quality estimate
(ce_score) via their geometric mean. All four values live in [0, 1]; above
0.5 counts as acceptable. No reference simplifications are needed, only two
public word-statistics files (a Zipf frequency list and a percent-known
familiarity list).
"""

from .errors import (
    CEScoreError,
    ConfigError,
    ConstantVector,
    DuplicateKey,
    EmptyLexicon,
    EmptyPair,
    LengthMismatch,
    LexiconUnavailable,
    MalformedRecord,
    MalformedRow,
    NoCandidateGrams,
    RangeError,
    TooFewSamples,
    ZeroLengthText,
)
from .estimator import CEScorer
from .evaluation import (
    CorrelationCell,
    CorrelationReport,
    EvalRecord,
    evaluate,
    f_avg,
    load_dataset,
    pearson,
    spearman,
    write_scatter_data,
)
from .grammar import GrammarConfig, g_score, partial_match, semi_match
from .lexicon import (
    Lexicon,
    LexiconEntry,
    count_syllables,
    load_lexicon,
    resolve_lexicon_paths,
)
from .meaning import m_score
from .scorer import Config, ScoreBundle, ce_score, score_records
from .simplicity import SimplicityConfig, TssBreakdown, asf, s_score, sls, tss
from .textproc import TokenizedText, ngrams, to_sentences, tokenize

__version__ = "0.1.0"

__all__ = [
    "CEScoreError",
    "CEScorer",
    "Config",
    "ConfigError",
    "ConstantVector",
    "CorrelationCell",
    "CorrelationReport",
    "DuplicateKey",
    "EmptyLexicon",
    "EmptyPair",
    "EvalRecord",
    "GrammarConfig",
    "LengthMismatch",
    "Lexicon",
    "LexiconEntry",
    "LexiconUnavailable",
    "MalformedRecord",
    "MalformedRow",
    "NoCandidateGrams",
    "RangeError",
    "ScoreBundle",
    "SimplicityConfig",
    "TokenizedText",
    "TooFewSamples",
    "TssBreakdown",
    "ZeroLengthText",
    "asf",
    "ce_score",
    "count_syllables",
    "evaluate",
    "f_avg",
    "g_score",
    "load_dataset",
    "load_lexicon",
    "m_score",
    "ngrams",
    "partial_match",
    "pearson",
    "resolve_lexicon_paths",
    "s_score",
    "score_records",
    "semi_match",
    "sls",
    "spearman",
    "to_sentences",
    "tokenize",
    "tss",
    "write_scatter_data",
]
