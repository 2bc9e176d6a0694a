"""Simplicity metrics: SLS, ASF, TSS, and the pairwise SScore.

SLS maps token count to a sigmoid-shaped simplicity value, ASF measures how
familiar a sentence's vocabulary is to a broad audience, TSS blends the two
into a per-text simplicity score, and SScore compares the TSS of a
simplified text against its source.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError, ZeroLengthText
from .lexicon import Lexicon
from .textproc import to_sentences, tokenize

__all__ = ["SimplicityConfig", "TssBreakdown", "sls", "asf", "tss", "s_score"]

# Weight blend constants must sum to one.
_WEIGHT_TOL = 1e-9


@dataclass(frozen=True)
class SimplicityConfig:
    """Tunable constants for the simplicity metrics.

    ``tau`` and ``omega`` shape the length sigmoid (steepness and midpoint in
    tokens); ``alpha`` and ``beta`` weight the lexical and structural terms
    of TSS. The defaults are the empirically determined values.
    """

    tau: float = 0.22
    omega: float = 13.0
    alpha: float = 0.45
    beta: float = 0.55

    def __post_init__(self):
        if self.tau <= 0:
            raise ConfigError(f"tau must be > 0, got {self.tau}")
        if self.omega <= 0:
            raise ConfigError(f"omega must be > 0, got {self.omega}")
        if self.alpha < 0 or self.beta < 0:
            raise ConfigError("alpha and beta must be non-negative")
        if abs(self.alpha + self.beta - 1.0) > _WEIGHT_TOL:
            raise ConfigError(f"alpha + beta must equal 1, got {self.alpha + self.beta}")


@dataclass(frozen=True)
class TssBreakdown:
    """TSS with its lexical and structural components."""

    f_lexl: float
    f_strc: float
    tss: float


def sls(token_count: int, cfg: SimplicityConfig | None = None) -> float:
    """Sentence Length Score: 1 - sigmoid(tau * (token_count - omega)).

    Strictly decreasing in ``token_count`` and always in (0, 1); equals 0.5
    at the midpoint ``omega``.
    """
    cfg = cfg or SimplicityConfig()
    if token_count <= 0:
        raise ZeroLengthText("SLS needs at least one token")
    x = cfg.tau * (token_count - cfg.omega)
    # Evaluate 1 - 1/(1 + exp(-x)) without overflowing for either sign of x.
    if x >= 0:
        ex = math.exp(-x)
        return ex / (1.0 + ex)
    return 1.0 / (1.0 + math.exp(x))


def asf(sentence: str, lex: Lexicon) -> float:
    """Average Sentence Familiarity.

    Over the distinct tokens that appear in the lexicon, the mean of
    percent_known * zipf / syllables. A sentence with no recognizable words
    scores 0 (maximally unfamiliar). Duplicated tokens do not reweight the
    mean.
    """
    total = 0.0
    count = 0
    # Sorted iteration keeps float summation order independent of hash seeds.
    for token in sorted(set(tokenize(sentence))):
        entry = lex.lookup(token)
        if entry is None:
            continue
        total += entry.percent_known * entry.zipf / entry.syllables
        count += 1
    return total / count if count else 0.0


def tss(text: str, lex: Lexicon, cfg: SimplicityConfig | None = None) -> TssBreakdown:
    """Text Simplicity Score.

    The lexical term is ASF over the whole text plus five times the cube
    root of the whole-text SLS. The structural term is the minimum over
    sentences of ASF(s) * SLS(s), which rewards splitting into short
    sentences by judging a text by its most complex sentence. Sentences
    without tokens (pure punctuation) are skipped. The result blends the two
    terms with the alpha/beta weights.
    """
    cfg = cfg or SimplicityConfig()
    tokens = tokenize(text)
    if not tokens:
        raise ZeroLengthText("TSS needs text with at least one token")

    f_lexl = asf(text, lex) + 5.0 * sls(len(tokens), cfg) ** (1.0 / 3.0)

    f_strc = None
    for sentence in to_sentences(text):
        sentence_tokens = tokenize(sentence)
        if not sentence_tokens:
            continue
        product = asf(sentence, lex) * sls(len(sentence_tokens), cfg)
        if f_strc is None or product < f_strc:
            f_strc = product
    if f_strc is None:
        f_strc = asf(text, lex) * sls(len(tokens), cfg)

    return TssBreakdown(
        f_lexl=f_lexl,
        f_strc=f_strc,
        tss=cfg.alpha * f_lexl + cfg.beta * f_strc,
    )


def s_score(
    complex_text: str,
    simple_text: str,
    lex: Lexicon,
    cfg: SimplicityConfig | None = None,
) -> float:
    """Simplicity score of a (complex, simplified) pair, clamped to [0, 1].

    Computes the relative TSS difference shifted to center at 0.5: identical
    texts score exactly 0.5, values above mean the output is simpler than
    the input.
    """
    cfg = cfg or SimplicityConfig()
    s_tss = tss(simple_text, lex, cfg).tss
    c_tss = tss(complex_text, lex, cfg).tss
    return min(max(_disparity(s_tss, c_tss), 0.0), 1.0)


def _disparity(s_tss: float, c_tss: float) -> float:
    denom = s_tss + c_tss
    if denom <= 0.0:
        # Only reachable with alpha = 0 and fully out-of-lexicon texts;
        # treat the pair as equally simple.
        return 0.5
    return (s_tss - c_tss) / denom + 0.5
