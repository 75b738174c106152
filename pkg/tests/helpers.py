"""Random object builders and hypothesis strategies shared across tests."""

from hypothesis import strategies as st

from parsec.compressor import Compressor, Rule
from parsec.corpus import Corpus, Label, LabeledInstance, TaggedSentence
from parsec.tags import PosTag

# a small alphabet keeps random patterns likely to actually match something
SMALL_WORD_TAGS = (PosTag.DT, PosTag.NN, PosTag.JJ, PosTag.VBZ, PosTag.IN, PosTag.RB)
SMALL_PUNCT_TAGS = (PosTag.COMMA, PosTag.SENT_FINAL)


def random_sentence(rng, max_len=10, punct_prob=0.2, word_tags=SMALL_WORD_TAGS):
    n = int(rng.integers(1, max_len + 1))
    words, tags = [], []
    for i in range(n):
        if rng.random() < punct_prob:
            tag = SMALL_PUNCT_TAGS[int(rng.integers(len(SMALL_PUNCT_TAGS)))]
            words.append(tag.value)
        else:
            tag = word_tags[int(rng.integers(len(word_tags)))]
            words.append(f"w{int(rng.integers(100))}")
        tags.append(tag)
    return TaggedSentence(tuple(words), tuple(tags))


def random_pattern(rng, max_len=4, word_tags=SMALL_WORD_TAGS):
    n = int(rng.integers(2, max_len + 1))
    tags = []
    for i in range(n):
        interior = 0 < i < n - 1
        if interior and rng.random() < 0.2:
            tags.append(PosTag.WILDCARD)
        else:
            tags.append(word_tags[int(rng.integers(len(word_tags)))])
    return tuple(tags)


def random_rule(rng, max_len=4, word_tags=SMALL_WORD_TAGS):
    pattern = random_pattern(rng, max_len, word_tags)
    k = int(rng.integers(1, len(pattern) + 1))
    decisions = tuple(sorted(rng.choice(len(pattern), size=k, replace=False).tolist()))
    return Rule(pattern, decisions)


def random_compressor(rng, max_rules=4, max_len=4, word_tags=SMALL_WORD_TAGS):
    n = int(rng.integers(1, max_rules + 1))
    return Compressor(tuple(random_rule(rng, max_len, word_tags) for _ in range(n)))


def random_corpus(rng, n_instances=6, name="random"):
    instances = []
    for i in range(n_instances):
        n_sent = int(rng.integers(1, 4))
        sentences = []
        for _ in range(n_sent):
            s = random_sentence(rng)
            while not s.words:
                s = random_sentence(rng)
            sentences.append(s)
        label = Label.POSITIVE if rng.random() < 0.5 else Label.NEGATIVE
        instances.append(LabeledInstance(tuple(sentences), label))
    return Corpus(tuple(instances), name=name)


# --------------------------------------------------------------------------
# hypothesis strategies

word_tag_st = st.sampled_from(SMALL_WORD_TAGS)
any_tag_st = st.sampled_from(SMALL_WORD_TAGS + SMALL_PUNCT_TAGS)


@st.composite
def sentences(draw, min_size=1, max_size=12):
    tags = draw(st.lists(any_tag_st, min_size=min_size, max_size=max_size))
    words = tuple(
        t.value if t.is_punctuation else f"w{draw(st.integers(0, 50))}" for t in tags
    )
    return TaggedSentence(words, tuple(tags))


@st.composite
def patterns(draw, max_size=4):
    n = draw(st.integers(2, max_size))
    out = []
    for i in range(n):
        if 0 < i < n - 1:
            out.append(draw(st.sampled_from(SMALL_WORD_TAGS + (PosTag.WILDCARD,))))
        else:
            out.append(draw(word_tag_st))
    return tuple(out)


@st.composite
def rules(draw, max_size=4):
    pattern = draw(patterns(max_size))
    decisions = draw(
        st.sets(st.integers(0, len(pattern) - 1), min_size=1, max_size=len(pattern))
    )
    return Rule(pattern, tuple(sorted(decisions)))


@st.composite
def compressors(draw, max_rules=4):
    return Compressor(tuple(draw(st.lists(rules(), min_size=1, max_size=max_rules))))


def as_strings(tags):
    return [t.value for t in tags]


def rules_as_strings(compressor):
    return [(as_strings(r.tags), list(r.decisions)) for r in compressor.rules]
