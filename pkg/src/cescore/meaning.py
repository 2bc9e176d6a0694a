"""Meaning preservation score: frequency-weighted token-set overlap."""

from __future__ import annotations

from .errors import EmptyPair
from .lexicon import Lexicon
from .textproc import tokenize

__all__ = ["m_score"]


def m_score(complex_text: str, simple_text: str, lex: Lexicon) -> float:
    """Score how much of the complex text's content survives in the output.

    Both texts are reduced to sets of distinct tokens (so rearranging or
    repeating words while splitting does not hurt the score). Each token is
    weighted by 1 / (1 + zipf), which makes rare, information-carrying words
    count far more than stop words; words missing from the lexicon take
    zipf = 0 and therefore the maximum weight of 1. The result is the weight
    of the shared tokens divided by the weight of all tokens, in [0, 1].
    """
    complex_tokens = set(tokenize(complex_text))
    simple_tokens = set(tokenize(simple_text))
    if not complex_tokens and not simple_tokens:
        raise EmptyPair("both texts tokenize to nothing")

    shared = 0.0
    union = 0.0
    # Sorted iteration keeps float summation order independent of hash seeds.
    for token in sorted(complex_tokens | simple_tokens):
        entry = lex.lookup(token)
        weight = 1.0 / (1.0 + (entry.zipf if entry is not None else 0.0))
        union += weight
        if token in complex_tokens and token in simple_tokens:
            shared += weight
    return shared / union
