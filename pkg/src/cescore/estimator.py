"""Scikit-learn compatible wrapper around the pair scorer.

CEScorer is a stateless transformer: ``fit`` resolves and loads the lexicon,
``transform`` maps an array-like of (complex, simplified) text pairs to a
float array with one column per score. It follows the estimator conventions
(get_params/set_params, clone, get_feature_names_out), so the scores can
feed straight into pipelines and downstream models.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .errors import CEScoreError
from .grammar import GrammarConfig
from .lexicon import Lexicon, load_lexicon, resolve_lexicon_paths
from .scorer import Config, ScoreBundle, ce_score
from .simplicity import SimplicityConfig

__all__ = ["CEScorer"]

_FEATURE_NAMES = ("s_score", "m_score", "g_score", "ce_score")


def _as_text_pairs(X) -> list[tuple[str, str]]:
    """Validate that X is a sequence of (complex, simplified) string pairs."""
    if isinstance(X, str):
        raise TypeError("X must be a sequence of (complex, simplified) pairs, not a string")
    if hasattr(X, "ndim"):
        if X.ndim != 2 or X.shape[1] != 2:
            raise ValueError(f"X must have shape (n_samples, 2), got {X.shape}")
        X = X.tolist()
    pairs = []
    for i, row in enumerate(X):
        if isinstance(row, str) or not hasattr(row, "__len__") or len(row) != 2:
            raise ValueError(f"row {i} is not a (complex, simplified) pair: {row!r}")
        complex_text, simple_text = row[0], row[1]
        if not isinstance(complex_text, str) or not isinstance(simple_text, str):
            raise TypeError(f"row {i} must contain two strings, got {row!r}")
        pairs.append((complex_text, simple_text))
    return pairs


class CEScorer(TransformerMixin, BaseEstimator):
    """Transform (complex, simplified) text pairs into quality scores.

    Parameters
    ----------
    freq_lexicon, familiarity_lexicon : str, optional
        Paths to the tab-separated lexicon files. When omitted, the
        CESCORE_FREQ_LEXICON / CESCORE_FAMILIARITY_LEXICON environment
        variables are consulted at fit time.
    lexicon : Lexicon, optional
        An already loaded lexicon; takes precedence over the paths.
    tau, omega, alpha, beta : float
        Simplicity constants (sigmoid steepness/midpoint, lexical and
        structural weights).
    n_min, n_max : int
        n-gram range for the grammaticality score.
    aggregation : str
        "max_per_candidate" (default) or "literal_double_sum".
    on_error : str
        "raise" (default) propagates scoring errors; "nan" emits NaN rows
        for pairs that cannot be scored (e.g. empty output text).

    Examples
    --------
    >>> scorer = CEScorer(lexicon=lex).fit()
    >>> scorer.transform([("The old man sat.", "The man sat. He was old.")])
    array([[...]])
    """

    def __init__(
        self,
        freq_lexicon=None,
        familiarity_lexicon=None,
        lexicon=None,
        tau=0.22,
        omega=13.0,
        alpha=0.45,
        beta=0.55,
        n_min=4,
        n_max=7,
        aggregation="max_per_candidate",
        on_error="raise",
    ):
        self.freq_lexicon = freq_lexicon
        self.familiarity_lexicon = familiarity_lexicon
        self.lexicon = lexicon
        self.tau = tau
        self.omega = omega
        self.alpha = alpha
        self.beta = beta
        self.n_min = n_min
        self.n_max = n_max
        self.aggregation = aggregation
        self.on_error = on_error

    def fit(self, X=None, y=None):
        """Validate the configuration and load the lexicon. X is ignored."""
        if self.on_error not in ("raise", "nan"):
            raise ValueError(f"on_error must be 'raise' or 'nan', got {self.on_error!r}")
        self.config_ = Config(
            simplicity=SimplicityConfig(
                tau=self.tau, omega=self.omega, alpha=self.alpha, beta=self.beta
            ),
            grammar=GrammarConfig(
                n_min=self.n_min, n_max=self.n_max, aggregation=self.aggregation
            ),
        )
        if self.lexicon is not None:
            if not isinstance(self.lexicon, Lexicon):
                raise TypeError(f"lexicon must be a Lexicon, got {type(self.lexicon)!r}")
            self.lexicon_ = self.lexicon
        else:
            freq, familiarity = resolve_lexicon_paths(self.freq_lexicon, self.familiarity_lexicon)
            self.lexicon_ = load_lexicon(freq, familiarity)
        return self

    def transform(self, X) -> np.ndarray:
        """Score each pair; returns an (n_samples, 4) float array.

        Columns are s_score, m_score, g_score, ce_score in that order.
        """
        check_is_fitted(self, "lexicon_")
        rows = []
        for complex_text, simple_text in _as_text_pairs(X):
            try:
                bundle = ce_score(complex_text, simple_text, self.lexicon_, self.config_)
                rows.append([bundle.s_score, bundle.m_score, bundle.g_score, bundle.ce_score])
            except CEScoreError:
                if self.on_error == "raise":
                    raise
                rows.append([np.nan] * 4)
        return np.asarray(rows, dtype=float).reshape(len(rows), 4)

    def score_pair(self, complex_text: str, simple_text: str) -> ScoreBundle:
        """Score a single pair and return the full bundle."""
        check_is_fitted(self, "lexicon_")
        return ce_score(complex_text, simple_text, self.lexicon_, self.config_)

    def get_feature_names_out(self, input_features=None):
        return np.asarray(_FEATURE_NAMES, dtype=object)
