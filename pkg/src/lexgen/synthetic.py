"""Synthetic corpora for desk-scale evaluation experiments.

Two languages are provided:

* a regular language of uniform-shape stems crossed with four tagged
  suffixes, whose reference list is the exact stem-by-suffix closure; and
* an ambiguous language with two competing 2sg-to-infinitive patterns,
  built to exercise paradigm blocking.

Both are generated deterministically from a seed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from lexgen.lexio import Lexicon, TaggedWord


@dataclass(frozen=True)
class SyntheticCorpus:
    lexicon: Lexicon
    reference: frozenset  # bare forms: the language's closure
    min_support: int


REG_CONSONANTS = "bdkt"
REG_VOWELS = "aio"
REG_VOWELS_2 = "ai"
REG_SUFFIXES = (("u", "TA"), ("in", "TB"), ("as", "TC"), ("etto", "TD"))
# Kills every stem-internal analogy (max support ~190 at this stem count)
# while keeping the suffix rules (support ~310).
REG_MIN_SUPPORT = 250


def _regular_stems():
    parts = [REG_CONSONANTS, REG_VOWELS, REG_CONSONANTS, REG_VOWELS_2,
             REG_CONSONANTS]
    return ["".join(p) for p in itertools.product(*parts)]


def build_regular_corpus(seed: int = 0, hole_rate: float = 0.1) -> SyntheticCorpus:
    """Stem-by-suffix language with ~10% of the forms held out.

    The reference is the full closure, so every held-out form the learner
    recreates is attested.
    """
    rng = random.Random(seed)
    stems = _regular_stems()
    reference = frozenset(
        stem + suffix for stem in stems for suffix, _tag in REG_SUFFIXES
    )
    entries = []
    for stem in stems:
        kept = [(s, t) for s, t in REG_SUFFIXES if rng.random() >= hole_rate]
        if not kept:
            kept = [REG_SUFFIXES[0]]
        for suffix, tag in kept:
            entries.append(TaggedWord(stem + suffix, tag))
    return SyntheticCorpus(Lexicon(entries), reference, REG_MIN_SUPPORT)


AMB_CONSONANTS = "bdgklmnt"
AMB_VOWELS = "aiou"
AMB_MIN_SUPPORT = 50
# (2sg suffix, infinitive suffix) per conjugation class
AMB_CLASS_A = ("es", "er")
AMB_CLASS_B = ("s", "re")


def _sample_stems(rng, count, shapes):
    pools = []
    for shape in shapes:
        pool = ["".join(p) for p in itertools.product(
            *(AMB_CONSONANTS if c == "C" else AMB_VOWELS for c in shape)
        )]
        pools.append(pool)
    per_shape = count // len(pools)
    stems = []
    for pool in pools:
        stems.extend(rng.sample(pool, per_shape))
    return stems


def build_ambiguous_corpus(seed: int = 0, stems_per_class: int = 300,
                           hole_rate: float = 0.15) -> SyntheticCorpus:
    """Two verb classes whose 2sg forms both end in -s, so the two
    2sg-to-infinitive strategies compete on each other's words.

    Stems are sparse random strings, which keeps accidental cross-stem
    analogies below the support threshold.  For ``hole_rate`` of the stems
    the infinitive is withheld; the reference closure contains only each
    stem's own class forms, so the competing strategy's output is a
    non-word.
    """
    rng = random.Random(seed)
    stems_a = _sample_stems(rng, stems_per_class, ["CVCC", "CVCVC"])
    stems_b = []
    taken = set(stems_a)
    for stem in _sample_stems(rng, stems_per_class * 2, ["CVCC", "CVCVC"]):
        if stem not in taken and len(stems_b) < stems_per_class:
            stems_b.append(stem)
            taken.add(stem)

    reference = set()
    entries = []
    for stems, (sfx_2sg, sfx_inf) in ((stems_a, AMB_CLASS_A),
                                      (stems_b, AMB_CLASS_B)):
        for stem in stems:
            reference.add(stem + sfx_2sg)
            reference.add(stem + sfx_inf)
            entries.append(TaggedWord(stem + sfx_2sg, "V2"))
            if rng.random() >= hole_rate:
                entries.append(TaggedWord(stem + sfx_inf, "INF"))
    return SyntheticCorpus(Lexicon(entries), frozenset(reference),
                           AMB_MIN_SUPPORT)
