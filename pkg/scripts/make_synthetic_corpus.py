"""Generate the bundled synthetic review corpora under data/synthetic/.

Construction rules:
  * every sentiment-bearing word in an instance carries the instance's
    polarity, and each instance holds at least two of them, so the dictionary
    baseline classifies the whole corpus perfectly;
  * sentiment words sit in varied tag contexts (before nouns, sentence-final,
    after adverbs) so no single pattern can wipe them all out;
  * determiners, prepositions, pronouns and conjunctions make up well over a
    quarter of all tokens, so plenty of compressors exist that stay inside a
    20-23% window while deleting no sentiment word at all;
  * roughly one token in ten is sentiment-bearing.

Run from the repository root:  python3 scripts/make_synthetic_corpus.py
"""

from __future__ import annotations

import random
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "data" / "synthetic"

POSITIVE_WORDS = {
    "great": 3, "excellent": 4, "fantastic": 4, "wonderful": 3, "amazing": 4,
    "superb": 4, "impressive": 3, "outstanding": 4, "solid": 2, "delightful": 3,
    "reliable": 2, "pleasant": 2,
}
NEGATIVE_WORDS = {
    "terrible": -4, "awful": -4, "horrible": -4, "disappointing": -3, "poor": -2,
    "defective": -3, "useless": -3, "flimsy": -2, "faulty": -3, "dreadful": -4,
    "mediocre": -2, "unusable": -3,
}

# filler vocabulary, none of it sentiment-bearing, none of it a negation word
POOLS = {
    "DT": ["the", "a", "this", "that", "every", "some", "each", "another"],
    "NN": ["product", "item", "battery", "screen", "case", "box", "price", "store",
           "seller", "sound", "button", "cable", "manual", "charger", "package",
           "speaker", "keyboard", "cover", "strap", "remote", "month", "week",
           "design", "material", "surface", "handle", "zipper", "pocket", "lid",
           "stand", "frame", "lens", "cord", "plug", "slot", "clip", "latch",
           "shipment", "refund", "warranty", "adapter", "stylus", "tripod"],
    "NNS": ["features", "reviews", "parts", "buttons", "speakers", "pages",
            "instructions", "seams", "hinges", "settings", "corners", "edges",
            "accessories", "stitches", "ports"],
    "NNP": ["Amazon", "Sony", "Logitech", "Monday", "October", "Canon"],
    "PRP": ["it", "they", "we", "i", "she", "he"],
    "PRP$": ["its", "my", "our", "their"],
    "VBZ": ["is", "seems", "looks", "works", "feels", "sounds", "fits"],
    "VBD": ["was", "arrived", "broke", "worked", "lasted", "looked", "felt",
            "shipped", "stopped"],
    "VB": ["buy", "use", "return", "recommend", "try", "replace", "keep"],
    "VBG": ["using", "working", "charging", "reading", "holding"],
    "VBN": ["made", "built", "packaged", "designed", "assembled"],
    "VBP": ["are", "work", "seem", "feel", "look"],
    "MD": ["would", "could", "will", "might"],
    "IN": ["of", "in", "with", "for", "on", "from", "after", "inside"],
    "TO": ["to"],
    "CC": ["and", "but", "or"],
    "RB": ["really", "very", "quite", "too", "still", "surprisingly", "fairly"],
    "JJ": ["other", "small", "large", "new", "old", "main", "plastic", "metal",
           "second", "spare", "extra", "usual"],
    "JJR": ["better", "cheaper", "larger"],
    "EX": ["there"],
    "CD": ["two", "three", "five"],
    "RP": ["up", "down"],
}

# each template is a list of slots; "%" marks a sentiment adjective slot
TEMPLATES = [
    ["DT", "NN", "VBZ", "RB", "%", "."],
    ["PRP", "VBZ", "DT", "%", "NN", "."],
    ["DT", "NN", "VBD", "%", "CC", "%", "."],
    ["PRP$", "NN", "VBZ", "%", ",", "CC", "DT", "NN", "VBZ", "%", "."],
    ["DT", "NN", "IN", "DT", "NN", "VBZ", "%", "."],
    ["PRP", "VBP", "RB", "%", "."],
    ["DT", "JJ", "NN", "VBD", "RB", "%", "."],
    ["EX", "VBZ", "DT", "%", "NN", "IN", "DT", "NN", "."],
    ["DT", "NNS", "VBP", "%", "IN", "DT", "NN", "."],
    ["PRP", "VBD", "DT", "%", "NN", "IN", "NNP", "."],
    ["DT", "NN", "VBZ", "%", "CC", "DT", "NN", "VBZ", "JJ", "."],
    ["RB", ",", "DT", "NN", "VBZ", "%", "."],
    # neutral sentences, no sentiment slot
    ["PRP", "VBD", "DT", "JJ", "NN", "IN", "DT", "NN", "."],
    ["PRP", "MD", "VB", "DT", "NN", "CC", "DT", "NN", "."],
    ["NNP", "VBD", "DT", "NN", "IN", "DT", "NN", "."],
    ["DT", "NN", "VBZ", "VBN", "IN", "DT", "JJ", "NN", "."],
    ["EX", "VBP", "CD", "NNS", "IN", "DT", "NN", "."],
    ["PRP", "VBP", "VBG", "PRP$", "NN", "RB", "."],
    ["DT", "NN", "CC", "DT", "NN", "VBP", "IN", "DT", "NN", "."],
    ["PRP", "VBD", "PRP$", "NN", "TO", "VB", "DT", "NN", "."],
]
SENTIMENT_TEMPLATES = [t for t in TEMPLATES if "%" in t]
NEUTRAL_TEMPLATES = [t for t in TEMPLATES if "%" not in t]

PUNCT_TAG = {".": ".", ",": ","}


def render(template, sentiment_pool, rng):
    words, tags = [], []
    for slot in template:
        if slot == "%":
            words.append(rng.choice(sentiment_pool))
            tags.append("JJ")
        elif slot in PUNCT_TAG:
            words.append(slot)
            tags.append(PUNCT_TAG[slot])
        else:
            words.append(rng.choice(POOLS[slot]))
            tags.append(slot)
    return words, tags


def build_instance(label, rng):
    sentiment_pool = sorted(POSITIVE_WORDS if label == "positive" else NEGATIVE_WORDS)
    n_sentences = rng.randint(2, 5)
    # at least two sentiment sentences per instance keeps the label robust
    n_sentiment = 2 if n_sentences <= 3 else rng.randint(2, 3)
    kinds = ["s"] * n_sentiment + ["n"] * (n_sentences - n_sentiment)
    rng.shuffle(kinds)
    sentences = []
    for kind in kinds:
        template = rng.choice(SENTIMENT_TEMPLATES if kind == "s" else NEUTRAL_TEMPLATES)
        sentences.append(render(template, sentiment_pool, rng))
    return sentences


def write_corpus(path, n_instances, seed):
    rng = random.Random(seed)
    labels = ["positive"] * (n_instances // 2) + ["negative"] * (n_instances - n_instances // 2)
    rng.shuffle(labels)
    lines = []
    for label in labels:
        lines.append(f"#label {label}")
        for words, tags in build_instance(label, rng):
            for w, t in zip(words, tags):
                lines.append(f"{w}\t{t}")
            lines.append("")
        lines.append("")
    path.write_text("\n".join(lines).rstrip("\n") + "\n", encoding="utf-8")
    return labels


def write_lexicon(path):
    entries = sorted({**POSITIVE_WORDS, **NEGATIVE_WORDS}.items())
    path.write_text(
        "# synthetic sentiment lexicon\n"
        + "\n".join(f"{w}\t{v}" for w, v in entries)
        + "\n",
        encoding="utf-8",
    )


def write_negations(path):
    path.write_text("\n".join(["not", "no", "never", "cannot", "n't", "without"]) + "\n",
                    encoding="utf-8")


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    write_corpus(OUT_DIR / "reviews_200.tagged", 200, seed=20240817)
    write_corpus(OUT_DIR / "gadgets_60.tagged", 60, seed=4011)
    write_corpus(OUT_DIR / "books_60.tagged", 60, seed=4012)
    write_corpus(OUT_DIR / "media_60.tagged", 60, seed=4013)
    write_lexicon(OUT_DIR / "lexicon.tsv")
    write_negations(OUT_DIR / "negations.txt")
    print(f"wrote corpora to {OUT_DIR}")


if __name__ == "__main__":
    main()
