"""Top-level scoring: combine S, M, and G into the overall CE score."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import CEScoreError, LexiconUnavailable
from .grammar import GrammarConfig, g_score
from .lexicon import Lexicon
from .meaning import m_score
from .simplicity import SimplicityConfig, s_score

__all__ = ["Config", "ScoreBundle", "ce_score", "score_records"]


@dataclass(frozen=True)
class Config:
    """All tunable constants in one place; the defaults reproduce the
    published values (tau=0.22, omega=13, alpha=0.45, beta=0.55, n in 4..7).
    """

    simplicity: SimplicityConfig = field(default_factory=SimplicityConfig)
    grammar: GrammarConfig = field(default_factory=GrammarConfig)


@dataclass(frozen=True)
class ScoreBundle:
    """The four scores for one (complex, simplified) pair, each in [0, 1].

    A value above 0.5 is considered acceptable for its criterion. ce_score
    is the geometric mean of the other three, so one failed criterion
    (score 0) zeroes the overall score.
    """

    s_score: float
    m_score: float
    g_score: float
    ce_score: float

    def as_dict(self) -> dict[str, float]:
        return {
            "s_score": self.s_score,
            "m_score": self.m_score,
            "g_score": self.g_score,
            "ce_score": self.ce_score,
        }


def ce_score(
    complex_text: str,
    simple_text: str,
    lex: Lexicon,
    cfg: Config | None = None,
) -> ScoreBundle:
    """Score one (complex, simplified) pair on all four criteria."""
    if lex is None:
        raise LexiconUnavailable("a loaded Lexicon is required for scoring")
    cfg = cfg or Config()
    m = m_score(complex_text, simple_text, lex)
    g = g_score(complex_text, simple_text, cfg.grammar)
    s = s_score(complex_text, simple_text, lex, cfg.simplicity)
    return ScoreBundle(s_score=s, m_score=m, g_score=g, ce_score=_geometric_mean(s, m, g))


def _geometric_mean(s: float, m: float, g: float) -> float:
    return (s * m * g) ** (1.0 / 3.0)


def score_records(
    records: Iterable[tuple[object, str, str]],
    lex: Lexicon,
    cfg: Config | None = None,
    jobs: int = 1,
) -> Iterator[tuple[object, ScoreBundle | CEScoreError]]:
    """Score a stream of (record_id, complex, simple) triples.

    Yields (record_id, ScoreBundle) on success and (record_id, error) when a
    record cannot be scored, always in input order; a bad record never
    aborts the batch. With jobs > 1 records are scored by a thread pool
    (per-record results stay deterministic and ordered).
    """
    cfg = cfg or Config()

    def score_one(record):
        record_id, complex_text, simple_text = record
        try:
            return record_id, ce_score(complex_text, simple_text, lex, cfg)
        except CEScoreError as exc:
            return record_id, exc

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(score_one, records)
    else:
        for record in records:
            yield score_one(record)
