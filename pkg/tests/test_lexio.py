import unicodedata

import pytest
from hypothesis import given, strategies as st

from lexgen.lexio import LexiconParseError, TaggedWord, parse_lexicon, write_words


def test_parse_basic():
    lex = parse_lexicon("cat,Ns\ncatch,V")
    assert [(w.form, w.tag) for w in lex] == [("cat", "Ns"), ("catch", "V")]


def test_parse_empty():
    assert len(parse_lexicon("")) == 0


def test_parse_nfc_normalizes():
    decomposed = unicodedata.normalize("NFD", "décidée")
    assert len(decomposed) > 7  # combining accents present
    lex = parse_lexicon(f"{decomposed},PF")
    assert lex[0].form == unicodedata.normalize("NFC", "décidée")
    assert len(lex[0].form) == 7


def test_parse_skips_comments_and_blanks():
    lex = parse_lexicon("// header\n\ncat,Ns\n   \n// done\n")
    assert len(lex) == 1


def test_parse_dedups_exact_duplicates_keeps_order():
    lex = parse_lexicon("b,X\na,X\nb,X")
    assert [(w.form, w.tag) for w in lex] == [("b", "X"), ("a", "X")]


def test_parse_allows_same_form_different_tags():
    lex = parse_lexicon("walk,V\nwalk,Ns")
    assert len(lex) == 2


def test_parse_strips_whitespace_around_fields():
    lex = parse_lexicon("cat, Ns")
    assert lex[0] == TaggedWord("cat", "Ns")


def test_parse_lowercase_flag():
    lex = parse_lexicon("Cat,Ns", lowercase=True)
    assert lex[0].form == "cat"
    assert parse_lexicon("Cat,Ns")[0].form == "Cat"


@pytest.mark.parametrize("bad", [
    "nocomma",
    ",Ns",
    "cat,",
    "cat,N s",
    "cat,N#",
    "cat,N*",
    "cat,a,b",
])
def test_parse_rejects_malformed(bad):
    with pytest.raises(LexiconParseError):
        parse_lexicon(bad)


def test_parse_error_carries_line_number():
    with pytest.raises(LexiconParseError) as err:
        parse_lexicon("cat,Ns\nbroken\n")
    assert err.value.line_no == 2
    assert "line 2" in str(err.value)


def test_write_words_sorted():
    doc = write_words([TaggedWord("drames", "Np"), TaggedWord("dresser", "INF")])
    assert doc == "drames,Np\ndresser,INF"
    assert write_words([]) == ""
    assert write_words([TaggedWord("b", "X"), TaggedWord("a", "X")]) == "a,X\nb,X"


forms = st.text(alphabet="abcdefgh", min_size=1, max_size=8)
tags = st.sampled_from(["Ns", "V", "PP", "GER"])


@given(st.lists(st.tuples(forms, tags), max_size=20))
def test_round_trip(pairs):
    words = [TaggedWord(f, t) for f, t in dict.fromkeys(pairs)]
    reparsed = parse_lexicon(write_words(words))
    assert set(reparsed.entries) == set(words)
