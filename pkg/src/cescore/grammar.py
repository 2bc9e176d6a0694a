"""Grammaticality estimation via n-gram semi-matching against the source.

The simplified text is assumed to borrow its grammatical structure from the
(grammatical) source text, so each output sentence is checked for long
n-grams that fully or nearly appear in the source. Near misses count: two
n-grams that share an order-preserving subsequence of n-1 tokens score
(n-2)/n instead of dropping to zero, which keeps the check usable for
outputs that swap single words.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import ConfigError, LengthMismatch, NoCandidateGrams, ZeroLengthText
from .textproc import ngrams, to_sentences, tokenize

__all__ = [
    "AGGREGATION_MODES",
    "GrammarConfig",
    "partial_match",
    "semi_match",
    "g_score",
]

# "max_per_candidate" scores each candidate n-gram by its best source match,
# keeping the precision in [0, 1]. "literal_double_sum" sums the match score
# over every (source, candidate) pair and can exceed 1 when one candidate
# gram semi-matches many source grams; it exists for fidelity experiments.
AGGREGATION_MODES = ("max_per_candidate", "literal_double_sum")


@dataclass(frozen=True)
class GrammarConfig:
    """n-gram range and aggregation mode for the grammaticality score."""

    n_min: int = 4
    n_max: int = 7
    aggregation: str = "max_per_candidate"

    def __post_init__(self):
        if self.n_min < 2:
            raise ConfigError(f"n_min must be >= 2, got {self.n_min}")
        if self.n_max < self.n_min:
            raise ConfigError(f"n_max must be >= n_min, got {self.n_min}..{self.n_max}")
        if self.aggregation not in AGGREGATION_MODES:
            raise ConfigError(
                f"aggregation must be one of {AGGREGATION_MODES}, got {self.aggregation!r}"
            )


def partial_match(a: tuple[str, ...], b: tuple[str, ...]) -> float:
    """Match score of two equal-length n-grams: 1, (n-2)/n, or 0.

    The overlap is the length of the longest order-preserving common
    subsequence. A full overlap scores 1, an overlap of n-1 scores (n-2)/n
    (a partial match), anything less scores 0.
    """
    a = tuple(a)
    b = tuple(b)
    if len(a) != len(b):
        raise LengthMismatch(f"n-gram lengths differ: {len(a)} vs {len(b)}")
    n = len(a)
    if n < 2:
        raise ValueError(f"n-grams must have at least 2 items, got {n}")
    if a == b:
        return 1.0
    if _lcs_len(a, b) == n - 1:
        return (n - 2) / n
    return 0.0


def semi_match(
    reference: list[str],
    candidate: list[str],
    n: int,
    cfg: GrammarConfig | None = None,
) -> float:
    """Precision of the candidate's n-grams against the reference's.

    Under the default aggregation every candidate n-gram contributes its best
    match score over all reference n-grams, averaged over the candidate
    grams. A reference shorter than ``n`` yields 0; a candidate shorter than
    ``n`` is an error (callers filter n against the sentence length).
    """
    cfg = cfg or GrammarConfig()
    if n < 2:
        raise ValueError(f"n-gram size must be >= 2, got {n}")
    if len(candidate) < n:
        raise NoCandidateGrams(f"candidate has {len(candidate)} tokens, needs >= {n}")
    if len(reference) < n:
        return 0.0

    candidate_grams = ngrams(candidate, n)
    reference_index = [(gram, Counter(gram)) for gram in ngrams(reference, n)]
    if cfg.aggregation == "max_per_candidate":
        total = sum(_best_match(gram, reference_index, n) for gram in candidate_grams)
    else:
        total = sum(_pair_sum(gram, reference_index, n) for gram in candidate_grams)
    return total / len(candidate_grams)


def g_score(complex_text: str, simple_text: str, cfg: GrammarConfig | None = None) -> float:
    """Grammaticality score of the simplified text in [0, 1].

    Each output sentence gets the mean semi-match over the n-gram sizes it
    can support: the configured range for long sentences, the largest
    applicable subset for medium ones, and a single whole-sentence gram for
    2-3 token sentences. Sentences with fewer than two tokens score 0. The
    text's score is the minimum over the sentences that scored above zero
    (one bad sentence ruins the text, but wordless punctuation fragments are
    ignored); if no sentence scores above zero the result is 0.
    """
    cfg = cfg or GrammarConfig()
    if not tokenize(simple_text):
        raise ZeroLengthText("grammaticality needs output text with at least one token")
    reference = tokenize(complex_text)

    sentence_scores = []
    for sentence in to_sentences(simple_text):
        tokens = tokenize(sentence)
        if len(tokens) < 2:
            sentence_scores.append(0.0)
            continue
        levels = [n for n in range(cfg.n_min, cfg.n_max + 1) if len(tokens) >= n]
        if not levels:
            levels = [len(tokens)]
        total = sum(semi_match(reference, tokens, n, cfg) for n in levels)
        sentence_scores.append(total / len(levels))

    positives = [score for score in sentence_scores if score > 0.0]
    return min(positives) if positives else 0.0


def _lcs_len(a: tuple[str, ...], b: tuple[str, ...]) -> int:
    """Length of the longest common subsequence of two short tuples."""
    prev = [0] * (len(b) + 1)
    for item in a:
        current = [0]
        for j, other in enumerate(b, start=1):
            if item == other:
                current.append(prev[j - 1] + 1)
            else:
                current.append(max(current[-1], prev[j]))
        prev = current
    return prev[-1]


def _best_match(gram, reference_index, n):
    """Best partial-match score of one candidate gram over the reference."""
    counts = Counter(gram)
    found_partial = False
    for ref_gram, ref_counts in reference_index:
        if ref_gram == gram:
            return 1.0
        if found_partial:
            continue
        # The multiset overlap bounds the ordered overlap from above, so a
        # cheap count comparison skips most of the LCS computations.
        shared = sum(min(counts[token], count) for token, count in ref_counts.items())
        if shared >= n - 1 and _lcs_len(gram, ref_gram) == n - 1:
            found_partial = True
    return (n - 2) / n if found_partial else 0.0


def _pair_sum(gram, reference_index, n):
    """Sum of partial-match scores of one candidate gram over the reference."""
    counts = Counter(gram)
    partial = (n - 2) / n
    total = 0.0
    for ref_gram, ref_counts in reference_index:
        if ref_gram == gram:
            total += 1.0
            continue
        shared = sum(min(counts[token], count) for token, count in ref_counts.items())
        if shared >= n - 1 and _lcs_len(gram, ref_gram) == n - 1:
            total += partial
    return total
