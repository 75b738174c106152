"""Evolutionary POS-pattern text compression with sentiment-preserving fitness."""

from .compressor import (
    Compressor,
    InvariantViolation,
    ParseError,
    Rule,
    apply_compressor,
    apply_rule,
    compression_rate,
    deserialize_model,
    match_rule_at,
    serialize_model,
)
from .corpus import (
    Corpus,
    CorpusFormatError,
    EmptyCorpus,
    Label,
    LabeledInstance,
    MisalignedLine,
    MissingLabel,
    TaggedSentence,
    TooFewInstances,
    UnknownTag,
    corpus_word_count,
    parse_tagged_corpus,
    split_train_test,
    write_tagged_corpus,
)
from .evolution import (
    EvolutionParams,
    FitnessReport,
    InitializationFailure,
    PrecomputedBaseline,
    create_compressor,
    create_decisions,
    create_pos_tags,
    crossover,
    evolve,
    fitness,
    init_population,
    mutate,
    precompute_baseline,
    select,
)
from .matching import CorpusMatcher
from .sentiment import (
    DEFAULT_NEGATIONS,
    BaselineAnalyzer,
    Lexicon,
    NegationList,
    TextAnalyzer,
    accuracy,
    classify,
    load_lexicon,
    load_negations,
    score_instance,
    score_sentence,
)
from .tags import PosTag, WORD_TAGS, PUNCTUATION_TAGS

__version__ = "0.1.0"
