"""Exception types shared across the package."""


class CEScoreError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(CEScoreError, ValueError):
    """Invalid metric configuration (weights, thresholds, n-gram range)."""


class LexiconUnavailable(CEScoreError):
    """No lexicon was supplied and none could be resolved from the environment."""


class MalformedRow(CEScoreError):
    """A lexicon file row failed validation; the message carries file and line."""


class EmptyLexicon(CEScoreError):
    """A lexicon file contained no valid data rows."""


class ZeroLengthText(CEScoreError, ValueError):
    """The operation requires text with at least one token."""


class EmptyPair(CEScoreError, ValueError):
    """Both texts of a pair tokenize to nothing."""


class LengthMismatch(CEScoreError, ValueError):
    """Paired sequences must have equal length."""


class NoCandidateGrams(CEScoreError, ValueError):
    """Candidate text is shorter than the requested n-gram size."""


class DatasetError(CEScoreError):
    """Base class for benchmark dataset problems."""


class MalformedRecord(DatasetError):
    """A dataset record is missing fields or carries out-of-range values."""


class DuplicateKey(DatasetError):
    """Two dataset records share the same (model_id, sentence_id)."""


class RangeError(DatasetError, ValueError):
    """A human rating lies outside its declared scale."""


class CorrelationError(CEScoreError):
    """Base class for correlation computation problems."""


class ConstantVector(CorrelationError, ValueError):
    """Correlation is undefined when one input has zero variance."""


class TooFewSamples(CorrelationError, ValueError):
    """Correlation needs at least three paired samples."""
