#!/usr/bin/env python3
"""Generate the integration-test fixtures for the lexshift CLI.

Every file under crates/cli/tests/fixtures/ is produced by this script, and
every interesting outcome (nearest neighbours, domain similarities, the
calibration table, rule assignments, worklist deltas, dataset filtering and
substitution) is re-derived here independently and asserted before anything
is written.  The expected/ directory holds golden outputs for the discrete
pipeline artefacts; the Rust integration tests compare against them.
"""

import math
import os

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIX = os.path.join(ROOT, "crates", "cli", "tests", "fixtures")
ASSETS = os.path.join(ROOT, "crates", "cli", "assets")


def rad(degrees):
    return math.radians(degrees)


# angle whose cosine is (almost exactly) the requested similarity
def ang(cosine):
    return math.degrees(math.acos(cosine))


class Space:
    """Orthogonal-plane embedding space: each plane spans two axes and the
    words placed in it sit on the unit circle of that plane."""

    def __init__(self, planes):
        self.dim = 2 * len(planes)
        self.vectors = {}
        for index, plane in enumerate(planes):
            for word, degrees in plane:
                assert word not in self.vectors, f"duplicate word {word}"
                vec = [0.0] * self.dim
                vec[2 * index] = math.cos(rad(degrees))
                vec[2 * index + 1] = math.sin(rad(degrees))
                self.vectors[word] = vec

    def cos(self, a, b):
        va, vb = self.vectors[a], self.vectors[b]
        return sum(x * y for x, y in zip(va, vb))

    def nearest(self, word):
        best, best_cos = None, None
        for other in sorted(self.vectors):
            if other == word:
                continue
            c = self.cos(word, other)
            if best_cos is None or c > best_cos:
                best, best_cos = other, c
        return best, best_cos

    def margin(self, word):
        scores = sorted(
            (self.cos(word, o) for o in self.vectors if o != word), reverse=True
        )
        return scores[0] - scores[1]

    def write(self, path):
        lines = [f"{len(self.vectors)} {self.dim}"]
        for word in sorted(self.vectors):
            comps = " ".join(repr(c) for c in self.vectors[word])
            lines.append(f"{word} {comps}")
        write_lines(path, lines)


def write_lines(path, lines):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for line in lines:
            handle.write(line + "\n")


# ---------------------------------------------------------------------------
# Target-domain embedding space (legal flavoured) -- 35 planes, 70 dims.

PAIR = ang(0.8)  # ~36.87 degrees

TARGET_PLANES = [
    [("charged", 0), ("convicted", PAIR)],
    [("guilty", 0), ("innocent", PAIR)],
    [("dismissed", 0), ("rejected", -14), ("striking", 25)],
    [("winning", 0), ("prevailing", PAIR)],
    [("performance", 0), ("delivery", -14), ("execution", 25)],
    [("scenic", 0), ("beautiful", -14), ("thrilling", 25)],
    [("excellent", 0), ("masterpiece", PAIR)],
    [("court", 0), ("judge", PAIR)],
    [("filing", 0), ("ruling", PAIR)],
    [("verdict", 0), ("plea", PAIR)],
    [("crime", 0), ("criminal", PAIR)],
    [("battery", 0), ("custody", PAIR)],
    [("witness", 0), ("hearing", PAIR)],
    [("opinion", 0), ("record", PAIR)],
    [("harsh", 0), ("awful", -14), ("twisted", 25)],
    [("counsel", 0), ("landmark", PAIR)],
    [("motion", 0), ("appeal", PAIR)],
    [("sympathizing", 0)],
    [("attorney", 0), ("lawyer", PAIR)],
    [("defendant", 0), ("plaintiff", PAIR)],
    [("evidence", 0), ("testimony", PAIR)],
    [("jury", 0), ("juror", PAIR)],
    [("clause", 0), ("provision", PAIR)],
    [("contract", 0), ("agreement", PAIR)],
    [("petition", 0), ("complaint", PAIR)],
    [("courtroom", 0), ("courthouse", -14), ("chamber", 25)],
    # verb planes used only by threshold calibration
    [("affirm", 0), ("uphold", ang(0.82))],
    [("grant", 0), ("allow", ang(0.63))],
    [("testify", 0), ("swear", ang(0.35))],
    [("argue", 0), ("contend", ang(0.27))],
    [("watch", 0), ("convene", ang(0.15)), ("portray", ang(0.05))],
    [("direct", 0), ("preside", ang(0.14))],
    [("act", 0), ("adjourn", ang(0.13))],
    [("film", 0), ("litigate", ang(0.12))],
    [("review", 0), ("sentence", ang(0.11))],
]

# Source-domain embedding space (movie flavoured) -- 30 planes, 60 dims.
SOURCE_PLANES = [
    [("sympathizing", 0), ("charged", 10), ("convicted", 30)],
    [("victorious", 0), ("winning", 10), ("prevailing", 30)],
    [("charm", 0), ("appeal", 10), ("motion", 25)],
    [("monument", 0), ("landmark", 10), ("counsel", 25)],
    [("courtroom", 0), ("courthouse", -14), ("chamber", 25)],
    [("guilty", 0), ("innocent", PAIR)],
    [("crime", 0), ("criminal", PAIR)],
    [("dismissed", 0), ("rejected", PAIR)],
    [("excellent", 0), ("masterpiece", PAIR)],
    [("performance", 0), ("delivery", PAIR)],
    [("execution", 0), ("craft", PAIR)],
    [("striking", 0), ("impressive", PAIR)],
    [("beautiful", 0), ("gorgeous", PAIR)],
    [("thrilling", 0), ("exciting", PAIR)],
    [("awful", 0), ("terrible", PAIR)],
    [("twisted", 0), ("weird", PAIR)],
    [("battery", 0), ("device", PAIR)],
    [("custody", 0), ("holding", PAIR)],
    [("court", 0), ("judge", PAIR)],
    [("filing", 0), ("ruling", PAIR)],
    [("verdict", 0), ("plea", PAIR)],
    [("witness", 0), ("hearing", PAIR)],
    [("opinion", 0), ("record", PAIR)],
    [("attorney", 0), ("lawyer", PAIR)],
    [("defendant", 0), ("plaintiff", PAIR)],
    [("evidence", 0), ("testimony", PAIR)],
    [("jury", 0), ("juror", PAIR)],
    [("clause", 0), ("provision", PAIR)],
    [("contract", 0), ("agreement", PAIR)],
    [("petition", 0), ("complaint", PAIR)],
]

# Bridge embedding space -- 4 planes, 8 dims.  Angles chosen so the scored
# lexicon words sit closer to (battery, landmark, beautiful, awful)'s target
# neighbour than to their source neighbour, while custody leans the other way.
BRIDGE_PLANES = [
    [("battery", 0), ("custody", 60), ("device", -ang(0.1)), ("holding", 60 + PAIR)],
    [("landmark", 0), ("counsel", 30), ("monument", 80)],
    [("beautiful", 0), ("scenic", 25), ("gorgeous", 70)],
    [("awful", 0), ("harsh", 25), ("terrible", 70)],
]

# ---------------------------------------------------------------------------
# Working vocabulary: 50 words with target-corpus counts summing to 229 of a
# 241-token corpus, so 95% coverage selects exactly the top 50 by count.

TARGET_COUNTS = {
    "court": 14, "judge": 12, "charged": 10, "convicted": 9, "crime": 8,
    "motion": 8, "filing": 7, "ruling": 7, "verdict": 6, "witness": 6,
    "hearing": 6, "guilty": 6, "opinion": 5, "record": 5, "counsel": 5,
    "appeal": 5, "criminal": 5, "dismissed": 4, "custody": 4, "plea": 4,
    "innocent": 4, "battery": 3, "landmark": 3, "excellent": 3, "striking": 3,
    "winning": 3, "beautiful": 3, "execution": 3, "performance": 3,
    "thrilling": 2, "awful": 2, "twisted": 2, "prevailing": 2,
    "attorney": 4, "lawyer": 4, "defendant": 4, "plaintiff": 4, "evidence": 4,
    "testimony": 4, "jury": 3, "juror": 3, "clause": 3, "provision": 3,
    "contract": 3, "agreement": 3, "petition": 3, "complaint": 3,
    "courtroom": 3, "courthouse": 3, "chamber": 3,
}
TAIL_WORDS = [
    "affidavit", "deposition", "docket", "gavel", "remand", "statute",
    "subpoena", "tort", "injunction", "paralegal", "notary", "probate",
]

POSITIVE_SEEDS = {
    "excellent": "very_positive", "appeal": "positive", "striking": "positive",
    "winning": "very_positive", "beautiful": "very_positive",
    "thrilling": "positive", "performance": "positive", "prevailing": "positive",
}
NEGATIVE_SEEDS = {
    "guilty": "very_negative", "crime": "negative", "criminal": "negative",
    "dismissed": "negative", "awful": "very_negative", "execution": "negative",
    "twisted": "negative", "convicted": "very_negative",
}

SCORED_LEXICON = [
    ("awful", -3), ("bad", -3), ("battery", -2), ("beautiful", 3),
    ("can't stand", -3), ("custody", -1), ("good", 3), ("landmark", 2),
    ("okay", 0),
]
ANTONYMS = [("guilty", "innocent")]

# Source-corpus counts for the sentiment-bearing words; everything else in
# the working vocabulary is absent from the movie corpus (count 0).
SOURCE_COUNTS = {
    "charged": 3, "excellent": 4, "performance": 5, "beautiful": 4,
    "thrilling": 3, "awful": 3, "twisted": 3, "winning": 3, "striking": 3,
    "appeal": 3, "execution": 3, "guilty": 3, "crime": 3, "criminal": 3,
    "dismissed": 3, "convicted": 3, "prevailing": 3, "innocent": 3,
    "custody": 2, "landmark": 2, "battery": 1,
}
SOURCE_FILLER = [
    ("film", 6), ("scene", 4), ("actor", 4), ("story", 3), ("plot", 3),
    ("director", 3), ("cast", 2), ("soundtrack", 2), ("cinema", 2),
    ("audience", 2), ("trailer", 1), ("script", 1),
]

VERB_PAIRS = [
    ("affirm", "uphold", 1),
    ("grant", "allow", 1),
    ("testify", "swear", 1),
    ("argue", "contend", 1),
    ("watch", "convene", 0),
    ("direct", "preside", 0),
    ("act", "adjourn", 0),
    ("film", "litigate", 0),
    ("review", "sentence", 0),
    ("watch", "uphold", 0),
    ("portray", "adjudicate", 0),  # adjudicate is out of vocabulary: skipped
]

# Expert annotations for the review worklist (seed class shown for clarity).
ANNOTATIONS = {
    "appeal": "neutral", "awful": "negative", "battery": "negative",
    "beautiful": "neutral", "charged": "negative", "convicted": "negative",
    "crime": "negative", "criminal": "negative", "dismissed": "negative",
    "excellent": "positive", "execution": "neutral", "guilty": "negative",
    "landmark": "positive", "performance": "positive", "prevailing": "positive",
    "striking": "negative", "thrilling": "neutral", "twisted": "neutral",
    "winning": "positive",
}

# Five-class movie review dataset with inline part-of-speech tags.
MOVIE_DATASET = [
    ("positive", "sam_NNP is_VBZ charged_VBN for_IN a_DT crime_NN"),
    ("very_negative", "the_DT movie_NN was_VBD awful_JJ"),
    ("negative", "the_DT charged_JJ scene_NN fell_VBD flat_JJ"),
    ("very_positive", "a_DT thrilling_JJ and_CC beautiful_JJ film_NN"),
    ("neutral", "the_DT striking_JJ miners_NNS gathered_VBD"),
    ("positive", "an_DT excellent_JJ performance_NN by_IN the_DT cast_NN"),
    ("negative", "a_DT twisted_JJ plot_NN with_IN no_DT payoff_NN"),
    ("neutral", "the_DT landmark_NN appears_VBZ in_IN every_DT shot_NN"),
    ("very_positive", "winning_JJ direction_NN and_CC excellent_JJ pacing_NN"),
    ("neutral", "the_DT battery_NN in_IN the_DT camera_NN died_VBD"),
    ("negative", "the_DT execution_NN of_IN the_DT plot_NN was_VBD poor_JJ"),
    ("neutral", "the_DT appeal_NN of_IN this_DT genre_NN fades_VBZ"),
    ("negative", "sadly_RB the_DT charged_VBN courtroom_NN drama_NN drags_VBZ"),
    ("positive", "the_DT landmark_NNP case_NN inspired_VBD hope_NN"),
]

LEGAL_DATASET = [
    ("positive", "the appeal succeeded in the high court"),
    ("negative", "the defendant was convicted of battery"),
    ("neutral", "the hearing was moved to monday"),
    ("negative", "a twisted interpretation of the statute"),
    ("positive", "a landmark victory for the plaintiffs"),
]

# Nine gold/predicted rows realising the confusion matrix
# [[2,1,0],[0,3,0],[0,1,2]] used by the metrics unit tests.
PREDICTIONS = [
    ("negative", "negative"), ("negative", "negative"), ("negative", "neutral"),
    ("neutral", "neutral"), ("neutral", "neutral"), ("neutral", "neutral"),
    ("positive", "positive"), ("positive", "positive"), ("positive", "neutral"),
]

SUBSTITUTION_TAGS = {}


def load_substitution_maps():
    for cls in ("positive", "negative", "neutral"):
        path = os.path.join(ASSETS, f"substitution_{cls}.tsv")
        table = {}
        with open(path, encoding="utf-8") as handle:
            for line in handle:
                tag, replacement = line.rstrip("\n").split("\t")
                table[tag] = replacement
        SUBSTITUTION_TAGS[cls] = table


def load_stopwords():
    path = os.path.join(ASSETS, "stopwords.txt")
    with open(path, encoding="utf-8") as handle:
        return {line.strip() for line in handle if line.strip()}


# ---------------------------------------------------------------------------
# Corpus construction: glue templates use stopwords only, so content-word
# counts are exactly the designed counts.

TEMPLATES3 = [
    "the {} and the {} were before the {}",
    "a {} of the {} was in the {}",
    "the {} about the {} and the {}",
    "this {} with a {} was under the {}",
    "some {} from the {} were at the {}",
    "each {} during the {} had its {}",
    "that {} between the {} and the {}",
    "most of the {} after the {} were with the {}",
]
TEMPLATES2 = ["the {} was with the {}", "a {} and a {}"]
TEMPLATE1 = "the {} was there"


def build_sentences(pool):
    sentences = []
    index = 0
    position = 0
    while position < len(pool):
        chunk = pool[position:position + 3]
        position += 3
        if len(chunk) == 3:
            template = TEMPLATES3[index % len(TEMPLATES3)]
        elif len(chunk) == 2:
            template = TEMPLATES2[index % len(TEMPLATES2)]
        else:
            template = TEMPLATE1
        sentences.append(template.format(*chunk))
        index += 1
    return sentences


def target_pool():
    order = [
        "court", "judge", "hearing", "witness", "verdict", "plea", "motion",
        "filing", "ruling", "opinion", "record", "counsel", "appeal",
        "attorney", "lawyer", "defendant", "plaintiff", "evidence",
        "testimony", "jury", "juror", "clause", "provision", "contract",
        "agreement", "petition", "complaint", "courtroom", "courthouse",
        "chamber", "crime", "criminal", "charged", "convicted", "guilty",
        "innocent", "custody", "battery", "dismissed", "landmark", "striking",
        "winning", "excellent", "beautiful", "execution", "performance",
        "thrilling", "awful", "twisted", "prevailing",
    ]
    assert sorted(order) == sorted(TARGET_COUNTS), "pool covers the vocabulary"
    pool = []
    remaining = dict(TARGET_COUNTS)
    # deal the words out round-robin so each sentence mixes themes
    while any(remaining.values()):
        for word in order:
            if remaining[word] > 0:
                remaining[word] -= 1
                pool.append(word)
    pool.extend(TAIL_WORDS)
    return pool


def source_pool():
    designed = []
    remaining = dict(SOURCE_COUNTS)
    order = sorted(SOURCE_COUNTS)
    while any(remaining.values()):
        for word in order:
            if remaining[word] > 0:
                remaining[word] -= 1
                designed.append(word)
    filler = []
    for word, count in SOURCE_FILLER:
        filler.extend([word] * count)
    pool = []
    di = fi = 0
    while di < len(designed) or fi < len(filler):
        for _ in range(2):
            if di < len(designed):
                pool.append(designed[di])
                di += 1
        if fi < len(filler):
            pool.append(filler[fi])
            fi += 1
    return pool


def count_content_words(sentences, stopwords):
    counts = {}
    for sentence in sentences:
        for token in sentence.split():
            if token not in stopwords:
                counts[token] = counts.get(token, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# Independent re-derivation of the pipeline outcomes.

def vocabulary_selection(counts, coverage):
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    total = sum(counts.values())
    running = 0
    selected = []
    for word, count in ranked:
        selected.append((word, count))
        running += count
        if float(running) >= coverage * float(total):
            break
    return selected, total


def seed_class(word):
    if word in POSITIVE_SEEDS:
        return "positive"
    if word in NEGATIVE_SEEDS:
        return "negative"
    return "neutral"


def score_sentiment(score):
    if score >= 1:
        return "positive"
    if score <= -1:
        return "negative"
    return "neutral"


class Profile:
    pass


def profile_word(word, target, source, bridge, vocab, src_counts, scored, antonyms):
    p = Profile()
    p.word = word
    p.tgt_nb = target.nearest(word)[0] if word in target.vectors else None
    p.src_nb = source.nearest(word)[0] if word in source.vectors else None
    p.dom_sim = None
    if p.tgt_nb is not None and p.src_nb is not None and p.src_nb in target.vectors:
        p.dom_sim = target.cos(p.tgt_nb, p.src_nb)
    p.generic = p.dom_sim is not None and p.dom_sim >= 0.2
    p.under = src_counts.get(word, 0) < 3
    p.gap = None
    if (
        word in bridge.vectors
        and p.tgt_nb in bridge.vectors
        and p.src_nb is not None
        and p.src_nb in bridge.vectors
    ):
        p.gap = bridge.cos(word, p.tgt_nb) - bridge.cos(word, p.src_nb)
    p.in_scored = word in scored
    p.assignable = p.in_scored and p.gap is not None and p.gap > 0.0
    p.not_antonyms = p.tgt_nb is not None and tuple(sorted((word, p.tgt_nb))) not in antonyms
    p.neighbor_seed = seed_class(p.tgt_nb) if (p.tgt_nb in vocab) else None
    return p


def adapt(profiles, vocab, scored):
    """Transcription of the designed rule chains, independent of the Rust
    implementation."""
    assignments = {}
    for word in sorted(vocab):
        p = profiles[word]
        cls = seed_class(word)
        specific = not p.generic
        if cls == "neutral":
            eligible = p.under or specific
            neighbor = profiles.get(p.tgt_nb) if p.tgt_nb is not None else None
            neighbor_generic = neighbor is not None and neighbor.generic
            r2_ok = (
                neighbor_generic
                and p.not_antonyms
                and p.neighbor_seed in ("positive", "negative")
            )
            if eligible and p.assignable and score_sentiment(scored[word]) != "neutral":
                assignments[word] = (score_sentiment(scored[word]), "R1")
            elif r2_ok:
                assignments[word] = (p.neighbor_seed, "R2")
            else:
                assignments[word] = ("neutral", "R3")
        else:
            opposite = {"positive": "negative", "negative": "positive"}[cls]
            if p.generic:
                assignments[word] = (cls, "R4")
            elif p.neighbor_seed == opposite and p.not_antonyms:
                assignments[word] = (opposite, "R5")
            elif p.neighbor_seed == cls:
                assignments[word] = (cls, "R5b")
            elif p.in_scored:
                assignments[word] = (score_sentiment(scored[word]), "R6")
            else:
                assignments[word] = ("neutral", "R7")
    return assignments


def calibration_table(target, pairs):
    usable = [
        (a, b, label)
        for a, b, label in pairs
        if a in target.vectors and b in target.vectors
    ]
    skipped = [(a, b) for a, b, _ in pairs if (a, b, 1) not in usable and (a, b, 0) not in usable]
    table = []
    chosen = None
    for step in range(1, 10):
        threshold = step / 10.0
        predicted = correct = 0
        for a, b, label in usable:
            if target.cos(a, b) >= threshold:
                predicted += 1
                if label == 1:
                    correct += 1
        precision = correct / predicted if predicted else None
        table.append((threshold, predicted, correct, precision))
        if chosen is None and precision is not None and precision >= 0.5:
            chosen = threshold
    return chosen, table, skipped


def main():
    load_substitution_maps()
    stopwords = load_stopwords()

    target = Space(TARGET_PLANES)
    source = Space(SOURCE_PLANES)
    bridge = Space(BRIDGE_PLANES)

    # -- corpora ----------------------------------------------------------
    glue = set()
    for template in TEMPLATES3 + TEMPLATES2 + [TEMPLATE1]:
        glue.update(t for t in template.split() if t != "{}")
    assert glue <= stopwords, f"template glue must be stopwords: {glue - stopwords}"

    target_sentences = build_sentences(target_pool())
    got = count_content_words(target_sentences, stopwords)
    expected_counts = dict(TARGET_COUNTS)
    for word in TAIL_WORDS:
        expected_counts[word] = 1
    assert got == expected_counts, "target corpus counts drifted"
    assert sum(got.values()) == 241

    source_sentences = build_sentences(source_pool())
    src_content = count_content_words(source_sentences, stopwords)
    for word, count in SOURCE_COUNTS.items():
        assert src_content.get(word) == count, (word, src_content.get(word))
    for word in TARGET_COUNTS:
        if word not in SOURCE_COUNTS:
            assert word not in src_content, f"{word} leaked into source corpus"

    # -- vocabulary selection ---------------------------------------------
    selected, total = vocabulary_selection(got, 0.95)
    assert total == 241
    assert len(selected) == 50, len(selected)
    vocab = {word for word, _ in selected}
    assert vocab == set(TARGET_COUNTS), "selection must be the designed 50 words"
    covered = sum(count for _, count in selected)
    assert covered == 229
    # one fewer word must fall below the coverage target
    assert (covered - selected[-1][1]) < 0.95 * total

    # -- embedding sanity ---------------------------------------------------
    for space in (target, source, bridge):
        for word, vec in space.vectors.items():
            norm = math.sqrt(sum(c * c for c in vec))
            assert abs(norm - 1.0) < 1e-12, (word, norm)
    assert len(target.vectors) == 75 and target.dim == 70
    assert len(source.vectors) == 65 and source.dim == 60
    assert len(bridge.vectors) == 13 and bridge.dim == 8
    for word in vocab:
        assert word in target.vectors, f"{word} missing from target space"
        assert word in source.vectors, f"{word} missing from source space"
        assert target.margin(word) > 0.05, f"ambiguous neighbour for {word}"

    scored = {w: s for w, s in SCORED_LEXICON if " " not in w}
    antonyms = {tuple(sorted(p)) for p in ANTONYMS}
    src_counts = dict(SOURCE_COUNTS)

    profiles = {}
    extra = set()
    for word in sorted(vocab):
        profiles[word] = profile_word(
            word, target, source, bridge, vocab, src_counts, scored, antonyms
        )
        neighbor = profiles[word].tgt_nb
        if neighbor is not None and neighbor not in vocab:
            extra.add(neighbor)
    assert extra == {"rejected", "delivery", "scenic", "masterpiece", "harsh"}, extra
    for word in sorted(extra):
        profiles[word] = profile_word(
            word, target, source, bridge, vocab, src_counts, scored, antonyms
        )

    # spot-check the profile geometry that the rules depend on
    p = profiles["charged"]
    assert (p.tgt_nb, p.src_nb) == ("convicted", "sympathizing")
    assert abs(p.dom_sim) < 1e-12 and not p.generic and not p.under
    p = profiles["battery"]
    assert (p.tgt_nb, p.src_nb) == ("custody", "device") and p.dom_sim is None
    assert p.gap is not None and abs(p.gap - 0.4) < 1e-9 and p.assignable
    p = profiles["custody"]
    assert (p.tgt_nb, p.src_nb) == ("battery", "holding")
    assert p.gap is not None and abs(p.gap + 0.3) < 1e-9 and not p.assignable
    p = profiles["landmark"]
    assert (p.tgt_nb, p.src_nb) == ("counsel", "monument") and p.gap > 0.05 and p.assignable
    p = profiles["motion"]
    assert (p.tgt_nb, p.src_nb) == ("appeal", "appeal") and p.generic
    assert not profiles["appeal"].generic  # lazy neighbour lookup must see this
    p = profiles["innocent"]
    assert p.generic and not p.not_antonyms
    p = profiles["execution"]
    assert p.tgt_nb == "performance" and p.src_nb == "craft" and not p.generic
    p = profiles["striking"]
    assert p.tgt_nb == "dismissed" and not p.generic
    p = profiles["winning"]
    assert p.tgt_nb == "prevailing" and not p.generic
    p = profiles["beautiful"]
    assert p.tgt_nb == "scenic" and not p.generic and p.gap > 0.05
    p = profiles["counsel"]
    assert p.generic and p.under
    generic_words = {w for w in vocab if profiles[w].generic}
    assert len(generic_words) == 38, len(generic_words)
    assert len(vocab - generic_words) == 12

    # -- threshold calibration ----------------------------------------------
    chosen, table, skipped = calibration_table(target, VERB_PAIRS)
    assert chosen == 0.2, chosen
    assert skipped == [("portray", "adjudicate")], skipped
    expected_counts_table = [
        (9, 4), (4, 4), (3, 3), (2, 2), (2, 2), (2, 2), (1, 1), (1, 1), (0, 0)
    ]
    assert [(p, c) for _, p, c, _ in table] == expected_counts_table, table
    assert table[0][3] < 0.5 and table[1][3] == 1.0

    # -- rule assignments ----------------------------------------------------
    assignments = adapt(profiles, vocab, scored)
    expected = {w: ("neutral", "R3") for w in vocab if seed_class(w) == "neutral"}
    expected.update({
        "charged": ("negative", "R2"),
        "battery": ("negative", "R1"),
        "landmark": ("positive", "R1"),
        "excellent": ("positive", "R4"),
        "performance": ("positive", "R4"),
        "prevailing": ("positive", "R4"),
        "appeal": ("neutral", "R7"),
        "thrilling": ("neutral", "R7"),
        "striking": ("negative", "R5"),
        "winning": ("positive", "R5b"),
        "beautiful": ("positive", "R6"),
        "guilty": ("negative", "R4"),
        "crime": ("negative", "R4"),
        "criminal": ("negative", "R4"),
        "dismissed": ("negative", "R4"),
        "convicted": ("negative", "R4"),
        "awful": ("negative", "R6"),
        "execution": ("positive", "R5"),
        "twisted": ("neutral", "R7"),
    })
    assert assignments == expected, {
        w: (assignments[w], expected[w])
        for w in assignments
        if assignments[w] != expected.get(w)
    }
    rule_census = {}
    for _, rule in assignments.values():
        rule_census[rule] = rule_census.get(rule, 0) + 1
    assert rule_census == {
        "R1": 2, "R2": 1, "R3": 31, "R4": 8, "R5": 2, "R5b": 1, "R6": 2, "R7": 3
    }, rule_census

    # -- deviations, worklist, deltas ----------------------------------------
    to_negative = sorted(
        w for w in vocab
        if seed_class(w) == "neutral" and assignments[w][0] == "negative"
    )
    to_positive = sorted(
        w for w in vocab
        if seed_class(w) == "neutral" and assignments[w][0] == "positive"
    )
    assert to_negative == ["battery", "charged"]
    assert to_positive == ["landmark"]

    worklist = sorted(
        set(to_negative) | set(to_positive)
        | set(POSITIVE_SEEDS) | set(NEGATIVE_SEEDS)
    )
    assert len(worklist) == 19
    assert worklist == sorted(ANNOTATIONS), "annotations must cover the worklist"

    deltas = {
        w: ANNOTATIONS[w] for w in worklist if ANNOTATIONS[w] != seed_class(w)
    }
    assert sorted(deltas) == [
        "appeal", "battery", "beautiful", "charged", "execution",
        "landmark", "striking", "thrilling", "twisted",
    ]
    newly_negative = sorted(w for w, s in deltas.items() if s == "negative")
    newly_positive = sorted(w for w, s in deltas.items() if s == "positive")
    newly_neutral = sorted(w for w, s in deltas.items() if s == "neutral")
    assert newly_negative == ["battery", "charged", "striking"]
    assert newly_positive == ["landmark"]
    assert newly_neutral == ["appeal", "beautiful", "execution", "thrilling", "twisted"]

    # -- dataset chain ---------------------------------------------------------
    def collapse(label):
        return {
            "very_negative": "negative", "negative": "negative",
            "neutral": "neutral",
            "positive": "positive", "very_positive": "positive",
        }[label]

    mapped = [(collapse(label), text) for label, text in MOVIE_DATASET]
    removals = []
    filtered = []
    for index, (label, text) in enumerate(mapped):
        words = [token.rsplit("_", 1)[0].lower() for token in text.split()]
        conflicts = sorted({w for w in words if w in deltas and deltas[w] != label})
        if conflicts:
            removals.append((index, label, conflicts))
        else:
            filtered.append((label, text))
    assert [r[0] for r in removals] == [0, 3, 4, 6, 7, 9, 10], removals
    assert removals[1][2] == ["beautiful", "thrilling"]
    assert len(filtered) == 7

    substituted = []
    unmapped = []
    for index, (label, text) in enumerate(filtered):
        out_tokens = []
        for token in text.split():
            word, tag = token.rsplit("_", 1)
            if word.lower() in deltas:
                table = SUBSTITUTION_TAGS[deltas[word.lower()]]
                if tag in table:
                    out_tokens.append(f"{table[tag]}_{tag}")
                else:
                    unmapped.append((index, word.lower(), tag))
                    out_tokens.append(token)
            else:
                out_tokens.append(token)
        substituted.append((label, " ".join(out_tokens)))
    assert substituted[1][1] == "the_DT horrible_JJ scene_NN fell_VBD flat_JJ"
    assert substituted[4][1] == "the_DT statement_NN of_IN this_DT genre_NN fades_VBZ"
    assert substituted[5][1] == "sadly_RB the_DT hated_VBN courtroom_NN drama_NN drags_VBZ"
    assert substituted[0] == filtered[0] and substituted[2] == filtered[2]
    assert substituted[3] == filtered[3]
    assert unmapped == [(6, "landmark", "NNP")], unmapped

    merged = [(label, text, "source") for label, text in substituted]
    merged += [(label, text, "target") for label, text in LEGAL_DATASET]
    assert len(merged) == 12

    # eval fixtures: adapted polarity classes scored against expert labels
    positive_words = sorted(w for w, (s, _) in assignments.items() if s == "positive")
    negative_words = sorted(w for w, (s, _) in assignments.items() if s == "negative")
    assert positive_words == [
        "beautiful", "excellent", "execution", "landmark", "performance",
        "prevailing", "winning",
    ]
    assert negative_words == [
        "awful", "battery", "charged", "convicted", "crime", "criminal",
        "dismissed", "guilty", "striking",
    ]
    pos_gold = [ANNOTATIONS[w] for w in positive_words]
    assert pos_gold.count("positive") == 5 and pos_gold.count("neutral") == 2
    assert all(ANNOTATIONS[w] == "negative" for w in negative_words)

    # -- write fixtures ---------------------------------------------------------
    target.write(os.path.join(FIX, "embeddings", "target.vec"))
    source.write(os.path.join(FIX, "embeddings", "source.vec"))
    bridge.write(os.path.join(FIX, "embeddings", "bridge.vec"))
    write_lines(os.path.join(FIX, "corpora", "target_corpus.txt"), target_sentences)
    write_lines(os.path.join(FIX, "corpora", "source_corpus.txt"), source_sentences)

    labels = []
    for word in sorted(vocab):
        label = POSITIVE_SEEDS.get(word) or NEGATIVE_SEEDS.get(word) or "neutral"
        labels.append(f"{word}\t{label}")
    write_lines(os.path.join(FIX, "lexicons", "source_labels.tsv"), labels)
    write_lines(
        os.path.join(FIX, "lexicons", "scored_lexicon.tsv"),
        [f"{w}\t{s}" for w, s in SCORED_LEXICON],
    )
    write_lines(
        os.path.join(FIX, "lexicons", "antonyms.tsv"),
        [f"{a}\t{b}" for a, b in ANTONYMS],
    )
    write_lines(
        os.path.join(FIX, "lexicons", "verb_pairs.tsv"),
        [f"{a}\t{b}\t{label}" for a, b, label in VERB_PAIRS],
    )

    write_lines(
        os.path.join(FIX, "datasets", "movie_five.tsv"),
        ["label\tsentence"] + [f"{l}\t{t}" for l, t in MOVIE_DATASET],
    )
    write_lines(
        os.path.join(FIX, "datasets", "legal_three.tsv"),
        ["label\tsentence"] + [f"{l}\t{t}" for l, t in LEGAL_DATASET],
    )
    write_lines(
        os.path.join(FIX, "datasets", "predictions.tsv"),
        ["gold\tpredicted"] + [f"{g}\t{p}" for g, p in PREDICTIONS],
    )

    write_lines(
        os.path.join(FIX, "annotations", "worklist_completed.tsv"),
        ["word\tcurrent\tlabel"]
        + [f"{w}\t{assignments[w][0]}\t{ANNOTATIONS[w]}" for w in worklist],
    )

    write_lines(os.path.join(FIX, "words", "sample_words.txt"),
                ["battery", "charged", "striking", "zzznotfound"])
    write_lines(os.path.join(FIX, "eval", "positive_words.txt"), positive_words)
    write_lines(os.path.join(FIX, "eval", "negative_words.txt"), negative_words)
    write_lines(
        os.path.join(FIX, "eval", "gold_lexicon.tsv"),
        ["word\tsentiment"] + [f"{w}\t{s}" for w, s in sorted(ANNOTATIONS.items())],
    )

    write_lines(os.path.join(FIX, "pipeline.conf"), [
        "# paths resolve relative to this file",
        "target_embeddings=embeddings/target.vec",
        "source_embeddings=embeddings/source.vec",
        "bridge_embeddings=embeddings/bridge.vec",
        "source_labels=lexicons/source_labels.tsv",
        "scored_lexicon=lexicons/scored_lexicon.tsv",
        "antonyms=lexicons/antonyms.tsv",
        "verb_pairs=lexicons/verb_pairs.tsv",
        "target_corpus=corpora/target_corpus.txt",
        "source_corpus=corpora/source_corpus.txt",
        "coverage=0.95",
        "domain_similarity_threshold=0.2",
        "under_represented_below=3",
        "rng_seed=7",
        "per_word_samples=2",
        "rule_precedence=lexicon_first",
        "neighbor_transfer_scope=all_words",
        "neighbor_pool=all",
    ])

    # -- golden outputs ----------------------------------------------------------
    exp = os.path.join(FIX, "expected")
    write_lines(
        os.path.join(exp, "selection.tsv"),
        ["word\tcount"] + [f"{w}\t{c}" for w, c in selected],
    )
    write_lines(os.path.join(exp, "threshold.txt"), ["0.2"])
    write_lines(
        os.path.join(exp, "adapted_lexicon.tsv"),
        ["word\tsentiment\trule"]
        + [f"{w}\t{assignments[w][0]}\t{assignments[w][1]}" for w in sorted(vocab)],
    )
    write_lines(
        os.path.join(exp, "deviations.tsv"),
        ["word\tdirection"]
        + [f"{w}\tto_negative" for w in to_negative]
        + [f"{w}\tto_positive" for w in to_positive],
    )
    write_lines(
        os.path.join(exp, "worklist.tsv"),
        ["word\tcurrent\tlabel"] + [f"{w}\t{assignments[w][0]}\t" for w in worklist],
    )
    write_lines(
        os.path.join(exp, "annotated.tsv"),
        ["word\tsentiment"] + [f"{w}\t{ANNOTATIONS[w]}" for w in worklist],
    )
    write_lines(
        os.path.join(exp, "deltas.tsv"),
        ["word\tsentiment"] + [f"{w}\t{deltas[w]}" for w in sorted(deltas)],
    )
    write_lines(
        os.path.join(exp, "mapped.tsv"),
        ["label\tsentence"] + [f"{l}\t{t}" for l, t in mapped],
    )
    write_lines(
        os.path.join(exp, "filtered.tsv"),
        ["label\tsentence"] + [f"{l}\t{t}" for l, t in filtered],
    )
    write_lines(
        os.path.join(exp, "removals.tsv"),
        ["index\tlabel\tconflicts"]
        + [f"{i}\t{l}\t{','.join(c)}" for i, l, c in removals],
    )
    write_lines(
        os.path.join(exp, "substituted.tsv"),
        ["label\tsentence"] + [f"{l}\t{t}" for l, t in substituted],
    )
    write_lines(
        os.path.join(exp, "unmapped.tsv"),
        ["index\tword\ttag"] + [f"{i}\t{w}\t{t}" for i, w, t in unmapped],
    )
    write_lines(
        os.path.join(exp, "merged.tsv"),
        ["label\tsentence\tprovenance"] + [f"{l}\t{t}\t{p}" for l, t, p in merged],
    )

    print("fixtures written to", FIX)
    print("vocabulary:", len(vocab), "worklist:", len(worklist), "deltas:", len(deltas))


if __name__ == "__main__":
    main()
