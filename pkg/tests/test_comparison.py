from hypothesis import given, strategies as st

from lexgen.comparison import (
    REQUIRED,
    VAR,
    CompareConfig,
    Direction,
    Mark,
    compare_pair,
    render_dif,
    render_sim,
    select_direction,
    shared_anchor,
)
from lexgen.lexio import TaggedWord

CFG = CompareConfig()


def test_shared_anchor_examples():
    assert shared_anchor("receive", "reception") == (4, 0)
    assert shared_anchor("abc", "xyz") == (0, 0)
    assert shared_anchor("walking", "talking") == (0, 6)


def test_shared_anchor_identical():
    assert shared_anchor("cat", "cat") == (3, 3)


def test_select_direction_examples():
    assert select_direction(TaggedWord("receive", "V"),
                            TaggedWord("reception", "Ns"), CFG) is Direction.FORWARD
    assert select_direction(TaggedWord("cat", "Ns"),
                            TaggedWord("cat", "Ns"), CFG) is None
    assert select_direction(TaggedWord("walking", "GER"),
                            TaggedWord("talking", "GER"), CFG) is Direction.BACKWARD


def test_select_direction_short_words_skip():
    assert select_direction(TaggedWord("ab", "V"),
                            TaggedWord("abc", "V"), CFG) is None


def test_select_direction_forward_priority():
    # both anchors qualify; forward wins
    assert select_direction(TaggedWord("abxba", "V"),
                            TaggedWord("abyba", "V"), CFG) is Direction.FORWARD


def test_select_direction_conversion_gate():
    w1 = TaggedWord("walk", "V")
    w2 = TaggedWord("walk", "Ns")
    assert select_direction(w1, w2, CFG) is None
    open_cfg = CompareConfig(allow_conversion=True)
    assert select_direction(w1, w2, open_cfg) is Direction.FORWARD


def rendered(record):
    return (render_dif(record.dif1), render_dif(record.dif2),
            render_sim(record.sim1), render_sim(record.sim2))


def test_compare_receive_reception():
    rec = compare_pair(TaggedWord("receive", "V"),
                       TaggedWord("reception", "Ns"), Direction.FORWARD)
    assert rendered(rec) == ("Xive", "Xption", "rece###", "rece#####")
    assert (rec.cat1, rec.cat2) == ("V", "Ns")
    assert rec.count == 1


def test_compare_bake_baked():
    rec = compare_pair(TaggedWord("bake", "V"),
                       TaggedWord("baked", "PP"), Direction.FORWARD)
    assert rendered(rec) == ("X", "Xd", "bake", "bake#")


def test_compare_backward():
    rec = compare_pair(TaggedWord("walking", "GER"),
                       TaggedWord("talking", "GER"), Direction.BACKWARD)
    assert rendered(rec) == ("wX", "tX", "#alking", "#alking")
    assert rec.offsets1 == (0,) and rec.offsets2 == (0,)


def test_offsets_follow_dif_literal_order():
    rec = compare_pair(TaggedWord("receive", "V"),
                       TaggedWord("reception", "Ns"), Direction.FORWARD)
    # "ive": i at offset 2 from the right edge, v at 1, e at 0
    assert rec.offsets1 == (2, 1, 0)
    assert rec.offsets2 == (4, 3, 2, 1, 0)


forms = st.text(alphabet="abcd", min_size=3, max_size=9)
directions = st.sampled_from([Direction.FORWARD, Direction.BACKWARD])


def reconstruct(form_len, dif, offsets, sim, direction):
    """Rebuild the word a fresh record describes, independently of unify."""
    out = [None] * form_len
    literals = [s for s in dif if s is not VAR]
    for lit, off in zip(literals, offsets):
        idx = form_len - 1 - off if direction is Direction.FORWARD else off
        out[idx] = lit
    for idx, slot in enumerate(sim):
        if isinstance(slot, str):
            assert out[idx] is None
            out[idx] = slot
    assert all(c is not None for c in out)
    return "".join(out)


@given(forms, forms, directions)
def test_fresh_record_reconstruction(f1, f2, direction):
    rec = compare_pair(TaggedWord(f1, "A"), TaggedWord(f2, "B"), direction)
    assert len(rec.sim1) == len(f1)
    assert len(rec.sim2) == len(f2)
    assert reconstruct(len(f1), rec.dif1, rec.offsets1, rec.sim1, direction) == f1
    assert reconstruct(len(f2), rec.dif2, rec.offsets2, rec.sim2, direction) == f2


@given(forms, forms, directions)
def test_side_symmetry(f1, f2, direction):
    a = compare_pair(TaggedWord(f1, "A"), TaggedWord(f2, "B"), direction, 0, 1)
    b = compare_pair(TaggedWord(f2, "B"), TaggedWord(f1, "A"), direction, 1, 0)
    assert a == b.swapped()


@given(forms, forms, directions)
def test_no_adjacent_vars_and_hash_counts(f1, f2, direction):
    rec = compare_pair(TaggedWord(f1, "A"), TaggedWord(f2, "B"), direction)
    for dif, sim in ((rec.dif1, rec.sim1), (rec.dif2, rec.sim2)):
        assert not any(x is VAR and y is VAR for x, y in zip(dif, dif[1:]))
        literals = sum(1 for s in dif if s is not VAR)
        assert sum(1 for s in sim if s is REQUIRED) == literals
        assert not any(s is Mark.OPTIONAL for s in sim)
