import random

import pytest

from lexgen.lexio import Lexicon, TaggedWord, parse_lexicon

RECEIVE_FAMILY = """\
receive,V
conceive,V
deceive,V
reception,Ns
conception,Ns
deception,Ns
perception,Ns
"""

RECEIVE_WITNESSES = """\
receive,V
conceive,V
deceive,V
reception,Ns
conception,Ns
deception,Ns
"""

# Families of at least three witness pairs per pattern, in the shape of a
# small English lexicon with regular inflection.
ENGLISH_FIXTURE = """\
bake,V
baked,PP
charge,V
charged,PP
raise,V
raised,PP
helmet,Ns
helmets,Np
rabbit,Ns
rabbits,Np
ticket,Ns
tickets,Np
walk,V
walks,V3s
walked,PP
walking,GER
talk,V
talks,V3s
talked,PP
talking,GER
rock,V
rocks,V3s
rocked,PP
rocking,GER
jump,V
jumps,V3s
play,V
plays,V3s
kick,V
kicks,V3s
quick,ADJ
quickly,ADV
slow,ADJ
slowly,ADV
soft,ADJ
softly,ADV
hard,ADJ
hardest,ADJ
short,ADJ
shortest,ADJ
loud,ADJ
loudest,ADJ
"""

# Two competing 2sg->infinitive patterns (Xs/Xr vs Xs/Xre, three witness
# pairs each).  The -re class mixes romps/vends/comprends so the merged
# template generalizes to ****##### and admits conjugues, whose wrong
# candidate conjuguere can then be vetoed by blocking because conjuguer
# shares its paradigm.
CONJUGATION_FIXTURE = """\
conjugues,V2
conjuguer,INF
donnes,V2
donner,INF
portes,V2
porter,INF
romps,V2
rompre,INF
vends,V2
vendre,INF
comprends,V2
comprendre,INF
"""

ALPHABET = "abcdef"
TAGS = ("T0", "T1", "T2", "T3")


def random_words(rng, max_words=30):
    words = []
    seen = set()
    for _ in range(rng.randint(2, max_words)):
        form = "".join(rng.choice(ALPHABET)
                       for _ in range(rng.randint(3, 9)))
        tag = rng.choice(TAGS)
        if (form, tag) not in seen:
            seen.add((form, tag))
            words.append((form, tag))
    return words


@pytest.fixture(scope="session")
def random_corpus():
    """100 small random lexicons shared by the oracle and property suites."""
    rng = random.Random(20240817)
    return [random_words(rng) for _ in range(100)]


def as_lexicon(words):
    return Lexicon(TaggedWord(f, t) for f, t in words)


@pytest.fixture
def receive_lexicon():
    return parse_lexicon(RECEIVE_FAMILY)


@pytest.fixture
def english_lexicon():
    return parse_lexicon(ENGLISH_FIXTURE)


@pytest.fixture
def conjugation_lexicon():
    return parse_lexicon(CONJUGATION_FIXTURE)
