"""Corpus preparation: raw labeled reviews to POS-tagged vertical corpora."""

from .pipeline import tag_reviews
from .reviews import (
    RawReview,
    ReviewFormatError,
    SamplingError,
    parse_reviews,
    sample_balanced,
    write_reviews,
)
from .tagging import (
    TAG_ALIASES,
    VALID_TAGS,
    ExternalTagger,
    FallbackTagger,
    TagMappingError,
    TaggerUnavailable,
    normalize_tag,
)

__version__ = "0.1.0"
