"""Penn Treebank part-of-speech tag set.

36 word-level tags, 12 punctuation/symbol tags (kept under their literal
Penn strings), plus a wildcard used only inside compression rule patterns.
"""

from __future__ import annotations

import enum


class PosTag(enum.Enum):
    # word-level tags
    CC = "CC"        # coordinating conjunction
    CD = "CD"        # cardinal number
    DT = "DT"        # determiner
    EX = "EX"        # existential there
    FW = "FW"        # foreign word
    IN = "IN"        # preposition or subordinating conjunction
    JJ = "JJ"        # adjective
    JJR = "JJR"      # adjective, comparative
    JJS = "JJS"      # adjective, superlative
    LS = "LS"        # list item marker
    MD = "MD"        # modal
    NN = "NN"        # noun, singular or mass
    NNS = "NNS"      # noun, plural
    NNP = "NNP"      # proper noun, singular
    NNPS = "NNPS"    # proper noun, plural
    PDT = "PDT"      # predeterminer
    POS = "POS"      # possessive ending
    PRP = "PRP"      # personal pronoun
    PRP_POSS = "PRP$"
    RB = "RB"        # adverb
    RBR = "RBR"      # adverb, comparative
    RBS = "RBS"      # adverb, superlative
    RP = "RP"        # particle
    SYM = "SYM"      # symbol
    TO = "TO"
    UH = "UH"        # interjection
    VB = "VB"        # verb, base form
    VBD = "VBD"      # verb, past tense
    VBG = "VBG"      # verb, gerund or present participle
    VBN = "VBN"      # verb, past participle
    VBP = "VBP"      # verb, non-3rd person singular present
    VBZ = "VBZ"      # verb, 3rd person singular present
    WDT = "WDT"      # wh-determiner
    WP = "WP"        # wh-pronoun
    WP_POSS = "WP$"
    WRB = "WRB"      # wh-adverb

    # punctuation and symbol tags, literal Penn strings
    POUND = "#"
    DOLLAR = "$"
    SENT_FINAL = "."
    COMMA = ","
    COLON = ":"
    OPEN_PAREN = "("
    CLOSE_PAREN = ")"
    QUOTE = '"'
    OPEN_SINGLE_QUOTE = "`"
    OPEN_DOUBLE_QUOTE = "``"
    CLOSE_SINGLE_QUOTE = "'"
    CLOSE_DOUBLE_QUOTE = "''"

    # matches any single word-level tag inside a rule pattern, never punctuation
    WILDCARD = "*"

    def __str__(self) -> str:
        return self.value

    @property
    def is_punctuation(self) -> bool:
        return self in PUNCTUATION_TAGS

    @property
    def is_word_tag(self) -> bool:
        return self in WORD_TAGS


_MEMBERS = list(PosTag)

WORD_TAGS: tuple[PosTag, ...] = tuple(_MEMBERS[:36])
PUNCTUATION_TAGS: frozenset[PosTag] = frozenset(_MEMBERS[36:48])
WILDCARD = PosTag.WILDCARD

# wildcard may appear in the interior of a rule pattern, never at its edges
INTERIOR_PATTERN_TAGS: tuple[PosTag, ...] = WORD_TAGS + (WILDCARD,)

_BY_STRING = {tag.value: tag for tag in PosTag}


def tag_from_string(text: str) -> PosTag:
    """Look up a tag by its literal Penn string. Raises KeyError if unknown."""
    return _BY_STRING[text]


def is_known_tag(text: str) -> bool:
    return text in _BY_STRING
