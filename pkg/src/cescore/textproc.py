"""Deterministic tokenization, sentence splitting, and n-gram extraction.

Every metric in the package goes through these three functions, so their
behaviour is intentionally simple and rule-based: no external models, no
randomness, identical output for identical input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

__all__ = ["TokenizedText", "tokenize", "to_sentences", "ngrams"]

# Tokens are runs of letters, digits, and apostrophes; underscore is excluded
# even though regex \w matches it.
_SPLIT_RE = re.compile(r"[^\w']+|_+")

_BOUNDARY_RE = re.compile(r"[.!?]+")

# Trailing word before a candidate boundary, used for abbreviation lookup.
# Dots stay inside the match so "e.g." resolves to "e.g".
_TRAILING_WORD_RE = re.compile(r"[\w.']+$")

# Abbreviations whose trailing period never ends a sentence.
_ABBREVIATIONS = frozenset(
    {
        "mr", "mrs", "ms", "dr", "prof", "st", "sr", "jr",
        "etc", "e.g", "i.e", "cf", "vs", "no", "vol", "fig", "al",
    }
)


def tokenize(text: str) -> list[str]:
    """Split ``text`` into lowercase tokens.

    The split happens on every character outside [letter, digit, apostrophe].
    Pieces without at least one letter or digit are dropped, boundary
    apostrophes are stripped (so apostrophes only ever appear inside a token,
    as in "i'm"), and order and duplicates are preserved.
    """
    tokens = []
    for piece in _SPLIT_RE.split(text.lower()):
        piece = piece.strip("'")
        if piece and any(ch.isalnum() for ch in piece):
            tokens.append(piece)
    return tokens


def to_sentences(text: str) -> list[str]:
    """Split ``text`` into sentences with a rule-based boundary detector.

    A run of '.', '!', '?' ends a sentence when it is followed by whitespace
    and the next non-space character is an uppercase letter or a digit, or
    when only whitespace remains. A period after a known abbreviation (mr,
    dr, e.g, ...) never splits. Returned sentences are stripped and never
    empty; whitespace-only input yields an empty list.
    """
    sentences = []
    start = 0
    for match in _BOUNDARY_RE.finditer(text):
        end = match.end()
        if end >= len(text):
            break
        if not text[end].isspace():
            continue
        follow = text[end:].lstrip()
        if follow and not (follow[0].isupper() or follow[0].isdigit()):
            continue
        if set(match.group()) == {"."} and _ends_with_abbreviation(text[: match.start()]):
            continue
        piece = text[start:end].strip()
        if piece:
            sentences.append(piece)
        start = end
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _ends_with_abbreviation(prefix: str) -> bool:
    match = _TRAILING_WORD_RE.search(prefix)
    if match is None:
        return False
    word = match.group().strip(".").lower()
    return word in _ABBREVIATIONS


def ngrams(tokens: list[str], n: int) -> list[tuple[str, ...]]:
    """Return all contiguous windows of length ``n``, in order.

    Duplicates are preserved; the result is empty when the input is shorter
    than ``n``.
    """
    if n < 1:
        raise ValueError(f"n-gram size must be >= 1, got {n}")
    return [tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)]


@dataclass(frozen=True)
class TokenizedText:
    """A text together with its token list and sentence split."""

    raw: str
    tokens: list[str] = field(repr=False)
    sentences: list[str] = field(repr=False)

    @classmethod
    def from_text(cls, text: str) -> "TokenizedText":
        return cls(raw=text, tokens=tokenize(text), sentences=to_sentences(text))
