"""Benchmark harness: correlate metric scores with human judgments.

A dataset is line-delimited JSON, one record per line, with per-record model
id, sentence id, the text pair, and human ratings for grammaticality and
meaning (1..5) and simplicity (-2..2), optionally plus a precomputed overall
quality value. The harness scores every record, then reports Pearson and
Spearman coefficients (with two-sided p-values) between metric scores and
human ratings at the sentence level and at the model level (per-model
means).
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field

import numpy as np
from scipy import stats as _scipy_stats

from .errors import (
    ConstantVector,
    DuplicateKey,
    LengthMismatch,
    MalformedRecord,
    RangeError,
    TooFewSamples,
)
from .lexicon import Lexicon
from .scorer import Config, ScoreBundle, score_records

__all__ = [
    "EvalRecord",
    "CorrelationCell",
    "CorrelationReport",
    "load_dataset",
    "f_avg",
    "pearson",
    "spearman",
    "evaluate",
    "write_scatter_data",
]

_REQUIRED_FIELDS = ("model_id", "sentence_id", "complex_text", "simple_text")

SENTENCE_CRITERIA = ("simplicity", "grammaticality", "meaning", "overall_avg", "overall_external")


@dataclass(frozen=True)
class EvalRecord:
    """One benchmark row: a scored pair plus its human ratings."""

    model_id: str
    sentence_id: str
    complex_text: str
    simple_text: str
    human_g: float
    human_m: float
    human_s: float
    human_overall: float | None = None

    @property
    def key(self) -> str:
        return f"{self.model_id}/{self.sentence_id}"


@dataclass(frozen=True)
class CorrelationCell:
    """Pearson/Spearman coefficients with p-values for one criterion."""

    pearson: float
    pearson_p: float
    spearman: float
    spearman_p: float
    n: int

    def as_dict(self) -> dict:
        return {
            "pearson": self.pearson,
            "pearson_p": self.pearson_p,
            "spearman": self.spearman,
            "spearman_p": self.spearman_p,
            "n": self.n,
        }


@dataclass
class CorrelationReport:
    """Correlations per criterion and level, plus scoring bookkeeping.

    Cells hold a CorrelationCell, or a reason string when the correlation is
    undefined for that criterion (constant vectors, missing data, too few
    samples). ``pairs`` keeps the raw (metric, human) vectors per
    (level, criterion) for scatter-plot export.
    """

    sentence_level: dict[str, CorrelationCell | str]
    model_level: dict[str, CorrelationCell | str]
    n_records: int
    n_scored: int
    n_failed: int
    failures: list[tuple[str, str]]
    pairs: dict[tuple[str, str], tuple[list[float], list[float]]] = field(repr=False)

    def to_dict(self) -> dict:
        def cells(level):
            return {
                criterion: cell.as_dict() if isinstance(cell, CorrelationCell) else {"error": cell}
                for criterion, cell in level.items()
            }

        return {
            "n_records": self.n_records,
            "n_scored": self.n_scored,
            "n_failed": self.n_failed,
            "failures": [{"id": key, "error": name} for key, name in self.failures],
            "sentence_level": cells(self.sentence_level),
            "model_level": cells(self.model_level),
        }


def load_dataset(path: str) -> list[EvalRecord]:
    """Read and validate a line-delimited JSON benchmark file.

    Ratings may be scalars or per-annotator lists (averaged on load). Every
    rating must lie within its scale, and (model_id, sentence_id) pairs must
    be unique. Errors report the offending line number.
    """
    records = []
    seen: set[tuple[str, str]] = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedRecord(f"line {lineno}: invalid JSON ({exc.msg})") from None
            if not isinstance(raw, dict):
                raise MalformedRecord(f"line {lineno}: record must be a JSON object")
            for name in _REQUIRED_FIELDS + ("human_g", "human_m", "human_s"):
                if name not in raw:
                    raise MalformedRecord(f"line {lineno}: missing field {name!r}")
            for name in ("complex_text", "simple_text"):
                if not isinstance(raw[name], str):
                    raise MalformedRecord(f"line {lineno}: {name} must be a string")
            record = EvalRecord(
                model_id=str(raw["model_id"]),
                sentence_id=str(raw["sentence_id"]),
                complex_text=raw["complex_text"],
                simple_text=raw["simple_text"],
                human_g=_rating(raw["human_g"], 1.0, 5.0, "human_g", lineno),
                human_m=_rating(raw["human_m"], 1.0, 5.0, "human_m", lineno),
                human_s=_rating(raw["human_s"], -2.0, 2.0, "human_s", lineno),
                human_overall=(
                    None
                    if raw.get("human_overall") is None
                    else _number(raw["human_overall"], "human_overall", lineno)
                ),
            )
            key = (record.model_id, record.sentence_id)
            if key in seen:
                raise DuplicateKey(f"line {lineno}: duplicate record {record.key!r}")
            seen.add(key)
            records.append(record)
    return records


def _rating(value, lo, hi, name, lineno):
    if isinstance(value, (list, tuple)):
        if not value:
            raise MalformedRecord(f"line {lineno}: {name} is an empty list")
        values = [_number(v, name, lineno) for v in value]
    else:
        values = [_number(value, name, lineno)]
    for v in values:
        if not lo <= v <= hi:
            raise MalformedRecord(f"line {lineno}: {name}={v} outside [{lo}, {hi}]")
    return sum(values) / len(values)


def _number(value, name, lineno):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MalformedRecord(f"line {lineno}: {name} must be a number, got {value!r}")
    return float(value)


def f_avg(g: float, m: float, s: float) -> float:
    """Overall human quality: mean of the three ratings mapped onto [0, 1].

    Grammaticality and meaning come from a 1..5 scale, simplicity from
    -2..2; each is rescaled to [0, 1] before averaging so no criterion
    dominates through its range.
    """
    if not 1.0 <= g <= 5.0:
        raise RangeError(f"grammaticality rating {g} outside [1, 5]")
    if not 1.0 <= m <= 5.0:
        raise RangeError(f"meaning rating {m} outside [1, 5]")
    if not -2.0 <= s <= 2.0:
        raise RangeError(f"simplicity rating {s} outside [-2, 2]")
    return ((g - 1.0) / 4.0 + (m - 1.0) / 4.0 + (s + 2.0) / 4.0) / 3.0


def pearson(x, y) -> tuple[float, float]:
    """Sample Pearson correlation with a two-sided p-value.

    The p-value comes from the t statistic r * sqrt((n-2) / (1-r^2)) against
    a Student-t distribution with n-2 degrees of freedom.
    """
    x, y = _validated_vectors(x, y)
    xd = x - x.mean()
    yd = y - y.mean()
    r = float(xd @ yd / math.sqrt((xd @ xd) * (yd @ yd)))
    r = min(max(r, -1.0), 1.0)
    return r, _t_p_value(r, len(x))


def spearman(x, y) -> tuple[float, float]:
    """Spearman rank correlation with a two-sided p-value.

    Computed as the Pearson correlation of the average-rank transforms; tied
    values share the mean of their rank positions.
    """
    x, y = _validated_vectors(x, y)
    return pearson(_rankdata(x), _rankdata(y))


def _validated_vectors(x, y) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 1 or y.ndim != 1:
        raise ValueError("correlation inputs must be one-dimensional")
    if len(x) != len(y):
        raise LengthMismatch(f"vector lengths differ: {len(x)} vs {len(y)}")
    if len(x) < 3:
        raise TooFewSamples(f"need at least 3 samples, got {len(x)}")
    if np.ptp(x) == 0.0:
        raise ConstantVector("first vector is constant")
    if np.ptp(y) == 0.0:
        raise ConstantVector("second vector is constant")
    return x, y


def _t_p_value(r: float, n: int) -> float:
    if abs(r) == 1.0:
        return 0.0
    df = n - 2
    t = abs(r) * math.sqrt(df / (1.0 - r * r))
    return float(2.0 * _scipy_stats.t.sf(t, df))


def _rankdata(values: np.ndarray) -> np.ndarray:
    """1-based ranks; ties receive the mean of their rank positions."""
    order = np.argsort(values, kind="stable")
    ranks = np.empty(len(values), dtype=float)
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[order[j + 1]] == values[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def evaluate(
    dataset: list[EvalRecord],
    lex: Lexicon,
    cfg: Config | None = None,
    jobs: int = 1,
) -> CorrelationReport:
    """Score a dataset and correlate the scores with the human ratings.

    Sentence-level cells pair per-record metric scores with per-record human
    ratings; model-level cells pair per-model means with per-model mean
    ratings (at least three distinct models required). Records the scorer
    rejects are dropped pairwise and listed under ``failures``. The
    "overall_external" criterion is only populated for records that carry a
    precomputed overall-quality value.

    Records are processed in a canonical (model_id, sentence_id) order, so
    permuting the dataset cannot change a single output bit.
    """
    if len(dataset) < 3:
        raise TooFewSamples(f"need at least 3 records, got {len(dataset)}")
    ordered = sorted(dataset, key=lambda r: (r.model_id, r.sentence_id))

    scored: list[tuple[EvalRecord, ScoreBundle]] = []
    failures: list[tuple[str, str]] = []
    outcomes = score_records(
        ((record.key, record.complex_text, record.simple_text) for record in ordered),
        lex,
        cfg,
        jobs=jobs,
    )
    for record, (_, outcome) in zip(ordered, outcomes):
        if isinstance(outcome, ScoreBundle):
            scored.append((record, outcome))
        else:
            failures.append((record.key, type(outcome).__name__))

    pairs: dict[tuple[str, str], tuple[list[float], list[float]]] = {}
    sentence_level = {}
    for criterion in SENTENCE_CRITERIA:
        xs, ys = _sentence_pairs(scored, criterion)
        pairs[("sentence", criterion)] = (xs, ys)
        sentence_level[criterion] = _correlate(xs, ys)

    model_level = {}
    by_model: dict[str, list[tuple[EvalRecord, ScoreBundle]]] = {}
    for record, bundle in scored:
        by_model.setdefault(record.model_id, []).append((record, bundle))
    for criterion in SENTENCE_CRITERIA:
        xs, ys = [], []
        for model_id in sorted(by_model):
            mx, my = _sentence_pairs(by_model[model_id], criterion)
            if mx:
                xs.append(sum(mx) / len(mx))
                ys.append(sum(my) / len(my))
        pairs[("model", criterion)] = (xs, ys)
        model_level[criterion] = _correlate(xs, ys)

    return CorrelationReport(
        sentence_level=sentence_level,
        model_level=model_level,
        n_records=len(dataset),
        n_scored=len(scored),
        n_failed=len(failures),
        failures=failures,
        pairs=pairs,
    )


def _sentence_pairs(scored, criterion):
    xs, ys = [], []
    for record, bundle in scored:
        if criterion == "simplicity":
            pair = (bundle.s_score, record.human_s)
        elif criterion == "grammaticality":
            pair = (bundle.g_score, record.human_g)
        elif criterion == "meaning":
            pair = (bundle.m_score, record.human_m)
        elif criterion == "overall_avg":
            pair = (bundle.ce_score, f_avg(record.human_g, record.human_m, record.human_s))
        else:
            if record.human_overall is None:
                continue
            pair = (bundle.ce_score, record.human_overall)
        xs.append(pair[0])
        ys.append(pair[1])
    return xs, ys


def _correlate(xs, ys) -> CorrelationCell | str:
    if not xs:
        return "no data"
    try:
        r, r_p = pearson(xs, ys)
        rho, rho_p = spearman(xs, ys)
    except (ConstantVector, TooFewSamples) as exc:
        return f"{type(exc).__name__}: {exc}"
    return CorrelationCell(pearson=r, pearson_p=r_p, spearman=rho, spearman_p=rho_p, n=len(xs))


def write_scatter_data(report: CorrelationReport, directory: str) -> list[str]:
    """Write one (metric, human) TSV per criterion/level for plotting.

    Returns the paths written; criteria without data are skipped.
    """
    os.makedirs(directory, exist_ok=True)
    written = []
    for (level, criterion), (xs, ys) in sorted(report.pairs.items()):
        if not xs:
            continue
        path = os.path.join(directory, f"{level}_{criterion}.tsv")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write("metric\thuman\n")
            for x, y in zip(xs, ys):
                handle.write(f"{x!r}\t{y!r}\n")
        written.append(path)
    return written
