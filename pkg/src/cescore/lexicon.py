"""Word-statistics resources: frequency (Zipf), familiarity, syllable counts.

The scorer consumes two tab-separated files. The frequency file (a
SUBTLEX-style word list) defines the vocabulary and supplies the Zipf value
of each word; the familiarity file (a percent-known survey list such as
Brysbaert's) supplies the fraction of people who recognize the word. Both
resources are distributed separately and are read here, never bundled.

File format: UTF-8, tab-separated, one header line. Column names are matched
case-insensitively ("word", "zipf" or "zipf-value", "percent_known" or
"pknown", optional "syllables"). Any Zipf-scaled column is accepted; the
loader does not care which corpus variant produced it. Extra columns are
ignored.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass, field

from .errors import EmptyLexicon, LexiconUnavailable, MalformedRow

__all__ = [
    "FREQ_LEXICON_ENV",
    "FAMILIARITY_LEXICON_ENV",
    "LexiconEntry",
    "Lexicon",
    "count_syllables",
    "load_lexicon",
    "resolve_lexicon_paths",
]

FREQ_LEXICON_ENV = "CESCORE_FREQ_LEXICON"
FAMILIARITY_LEXICON_ENV = "CESCORE_FAMILIARITY_LEXICON"

_VOWELS = frozenset("aeiouy")

_WORD_ALIASES = ("word",)
_ZIPF_ALIASES = ("zipf", "zipf_value")
_PERCENT_ALIASES = ("percent_known", "pknown")
_SYLLABLE_ALIASES = ("syllables",)


def count_syllables(word: str) -> int:
    """Estimate the syllable count of ``word``.

    Heuristic: count maximal vowel groups (a, e, i, o, u, y), then subtract
    one for a terminal silent "e" that is not preceded by "l" ("cake" -> 1,
    but "table" -> 2). Non-alphabetic characters are ignored; a word with no
    alphabetic characters counts as one syllable. The result is always >= 1.
    """
    letters = [ch for ch in word.lower() if ch.isalpha()]
    if not letters:
        return 1
    groups = 0
    prev_vowel = False
    for ch in letters:
        is_vowel = ch in _VOWELS
        if is_vowel and not prev_vowel:
            groups += 1
        prev_vowel = is_vowel
    if letters[-1] == "e" and (len(letters) < 2 or letters[-2] != "l"):
        groups -= 1
    return max(groups, 1)


@dataclass(frozen=True)
class LexiconEntry:
    """Statistics for one word: Zipf frequency, percent known, syllables."""

    word: str
    zipf: float
    percent_known: float
    syllables: int

    def __post_init__(self):
        if not self.word or self.word != self.word.lower() or any(c.isspace() for c in self.word):
            raise ValueError(f"invalid lexicon word: {self.word!r}")
        if not 1.0 <= self.zipf <= 8.0:
            raise ValueError(f"zipf value out of range [1, 8]: {self.zipf}")
        if not 0.0 <= self.percent_known <= 1.0:
            raise ValueError(f"percent_known out of range [0, 1]: {self.percent_known}")
        if self.syllables < 1:
            raise ValueError(f"syllable count must be >= 1: {self.syllables}")


@dataclass(frozen=True)
class Lexicon:
    """Immutable word -> entry map, safe to share across threads."""

    entries: dict[str, LexiconEntry]
    default_percent_known: float = field(default=0.0)

    @property
    def word_set(self) -> frozenset[str]:
        return frozenset(self.entries)

    def lookup(self, token: str) -> LexiconEntry | None:
        """Case-insensitive exact lookup; None when the word is unknown."""
        return self.entries.get(token.lower())

    def __contains__(self, token: str) -> bool:
        return token.lower() in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def resolve_lexicon_paths(
    freq_path: str | None = None, familiarity_path: str | None = None
) -> tuple[str, str]:
    """Resolve lexicon file paths from arguments or environment variables.

    Explicit arguments win over CESCORE_FREQ_LEXICON and
    CESCORE_FAMILIARITY_LEXICON. Raises LexiconUnavailable when either path
    is still missing.
    """
    freq = freq_path or os.environ.get(FREQ_LEXICON_ENV)
    familiarity = familiarity_path or os.environ.get(FAMILIARITY_LEXICON_ENV)
    if not freq or not familiarity:
        raise LexiconUnavailable(
            "lexicon paths not configured: pass --freq-lexicon/--familiarity-lexicon "
            f"or set {FREQ_LEXICON_ENV} and {FAMILIARITY_LEXICON_ENV}"
        )
    return freq, familiarity


def load_lexicon(frequency_path: str, familiarity_path: str) -> Lexicon:
    """Load and merge the frequency and familiarity files into a Lexicon.

    The frequency file defines the vocabulary: every word it lists becomes an
    entry. Familiarity values given on a 0-100 scale are detected (max value
    above 1.5) and divided by 100. Words with a Zipf value but no familiarity
    row fall back to the familiarity list's mean, so coverage gaps between
    the two resources neither punish nor inflate a word. Syllables come from
    a "syllables" column when one is present (frequency file first, then
    familiarity file), otherwise from :func:`count_syllables`. Duplicate
    words within a file keep the last row and emit a warning.
    """
    freq_rows = _read_rows(frequency_path, _ZIPF_ALIASES)
    fam_rows = _read_rows(familiarity_path, _PERCENT_ALIASES)
    if not freq_rows:
        raise EmptyLexicon(f"{frequency_path}: no valid data rows")
    if not fam_rows:
        raise EmptyLexicon(f"{familiarity_path}: no valid data rows")

    for lineno, word, zipf, _ in freq_rows:
        if not 1.0 <= zipf <= 8.0:
            raise MalformedRow(f"{frequency_path}:{lineno}: zipf value {zipf} outside [1, 8]")

    # 0-100 percent scale detection happens before range validation.
    scale = 100.0 if max(value for _, _, value, _ in fam_rows) > 1.5 else 1.0
    familiarity: dict[str, float] = {}
    fam_syllables: dict[str, int] = {}
    for lineno, word, value, syllables in _dedupe(fam_rows, familiarity_path):
        value /= scale
        if not 0.0 <= value <= 1.0:
            raise MalformedRow(
                f"{familiarity_path}:{lineno}: percent_known {value} outside [0, 1]"
            )
        familiarity[word] = value
        if syllables is not None:
            fam_syllables[word] = syllables

    default = sum(familiarity.values()) / len(familiarity)

    entries: dict[str, LexiconEntry] = {}
    for lineno, word, zipf, syllables in _dedupe(freq_rows, frequency_path):
        if syllables is None:
            syllables = fam_syllables.get(word) or count_syllables(word)
        try:
            entries[word] = LexiconEntry(
                word=word,
                zipf=zipf,
                percent_known=familiarity.get(word, default),
                syllables=syllables,
            )
        except ValueError as exc:
            raise MalformedRow(f"{frequency_path}:{lineno}: {exc}") from exc

    return Lexicon(entries=entries, default_percent_known=default)


def _read_rows(
    path: str, value_aliases: tuple[str, ...]
) -> list[tuple[int, str, float, int | None]]:
    """Parse one lexicon file into (lineno, word, value, syllables) rows."""
    with open(path, encoding="utf-8") as handle:
        header = handle.readline()
        if not header.strip():
            raise MalformedRow(f"{path}:1: missing header line")
        columns = [cell.strip().lower().replace("-", "_") for cell in header.rstrip("\n").split("\t")]
        word_idx = _column_index(columns, _WORD_ALIASES, path)
        value_idx = _column_index(columns, value_aliases, path)
        syll_idx = _optional_column_index(columns, _SYLLABLE_ALIASES)

        rows = []
        for lineno, line in enumerate(handle, start=2):
            if not line.strip():
                continue
            cells = line.rstrip("\n").split("\t")
            if max(word_idx, value_idx) >= len(cells):
                raise MalformedRow(f"{path}:{lineno}: expected at least {max(word_idx, value_idx) + 1} columns")
            word = cells[word_idx].strip().lower()
            if not word or any(ch.isspace() for ch in word):
                raise MalformedRow(f"{path}:{lineno}: invalid word {cells[word_idx]!r}")
            try:
                value = float(cells[value_idx])
            except ValueError:
                raise MalformedRow(
                    f"{path}:{lineno}: non-numeric value {cells[value_idx]!r}"
                ) from None
            syllables = None
            if syll_idx is not None and syll_idx < len(cells) and cells[syll_idx].strip():
                try:
                    syllables = int(cells[syll_idx])
                except ValueError:
                    raise MalformedRow(
                        f"{path}:{lineno}: non-integer syllable count {cells[syll_idx]!r}"
                    ) from None
                if syllables < 1:
                    raise MalformedRow(f"{path}:{lineno}: syllable count {syllables} must be >= 1")
            rows.append((lineno, word, value, syllables))
    return rows


def _column_index(columns: list[str], aliases: tuple[str, ...], path: str) -> int:
    idx = _optional_column_index(columns, aliases)
    if idx is None:
        raise MalformedRow(f"{path}:1: header has no column named one of {', '.join(aliases)}")
    return idx


def _optional_column_index(columns: list[str], aliases: tuple[str, ...]) -> int | None:
    for alias in aliases:
        if alias in columns:
            return columns.index(alias)
    return None


def _dedupe(rows, path):
    """Yield rows with duplicate words removed, keeping the last occurrence."""
    last: dict[str, tuple[int, str, float, int | None]] = {}
    for row in rows:
        word = row[1]
        if word in last:
            warnings.warn(
                f"duplicate word {word!r} in {path} (line {row[0]}); keeping the last occurrence",
                stacklevel=3,
            )
        last[word] = row
    return last.values()
