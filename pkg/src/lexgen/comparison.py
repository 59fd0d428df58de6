"""Edge-anchored letter-by-letter comparison of word pairs.

Two words that share a sufficiently long prefix (Forward) or suffix
(Backward) are walked position by position.  Matching letters go into the
per-side similarity templates and collapse to a single variable in the
difference patterns; mismatching letters go into the difference patterns
with an unspecified ``#`` slot in both templates.  The longer word's
overhang extends its own difference pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from lexgen.lexio import TaggedWord


class Mark(Enum):
    """Non-literal pattern symbols."""

    VAR = "X"       # collapsed run of shared material (difference patterns)
    REQUIRED = "#"  # letter that must be instantiated (similarity templates)
    OPTIONAL = "*"  # letter that may or may not be instantiated


VAR = Mark.VAR
REQUIRED = Mark.REQUIRED
OPTIONAL = Mark.OPTIONAL


class Direction(Enum):
    FORWARD = "forward"    # left-anchored; differences accumulate at the right edge
    BACKWARD = "backward"  # right-anchored; differences accumulate at the left edge


SKIP = None


@dataclass(frozen=True)
class CompareConfig:
    min_anchor: int = 2
    min_word_len: int = 3
    allow_conversion: bool = False
    lowercase: bool = False


def render_dif(dif) -> str:
    return "".join(s.value if isinstance(s, Mark) else s for s in dif)


def render_sim(sim) -> str:
    return "".join(s.value if isinstance(s, Mark) else s for s in sim)


@dataclass(frozen=True)
class ComparisonRecord:
    """Differences and similarities of one or more word pairs.

    ``offsets1``/``offsets2`` pin each difference-pattern literal to a slot
    index measured from the difference edge (the right edge for Forward
    records, the left edge for Backward ones).  They make unification
    well-defined after the similarity templates have been generalized by
    merging.
    """

    dif1: tuple
    cat1: str
    dif2: tuple
    cat2: str
    sim1: tuple
    sim2: tuple
    direction: Direction
    offsets1: tuple
    offsets2: tuple
    witnesses: tuple

    @property
    def count(self) -> int:
        return len(self.witnesses)

    def swapped(self) -> "ComparisonRecord":
        return ComparisonRecord(
            dif1=self.dif2, cat1=self.cat2,
            dif2=self.dif1, cat2=self.cat1,
            sim1=self.sim2, sim2=self.sim1,
            direction=self.direction,
            offsets1=self.offsets2, offsets2=self.offsets1,
            witnesses=tuple((b, a) for a, b in self.witnesses),
        )


def shared_anchor(w1: str, w2: str) -> tuple[int, int]:
    """Longest common prefix and suffix lengths of two forms."""
    limit = min(len(w1), len(w2))
    prefix = 0
    while prefix < limit and w1[prefix] == w2[prefix]:
        prefix += 1
    suffix = 0
    while suffix < limit and w1[-1 - suffix] == w2[-1 - suffix]:
        suffix += 1
    return prefix, suffix


def select_direction(w1: TaggedWord, w2: TaggedWord, cfg: CompareConfig):
    """Decide whether and how to compare a pair: Direction or None (skip).

    Forward takes priority when both anchors qualify.  Identical forms are
    compared (Forward) only when the tags differ and conversion is allowed.
    """
    if len(w1.form) < cfg.min_word_len or len(w2.form) < cfg.min_word_len:
        return SKIP
    if w1.form == w2.form:
        if w1.tag == w2.tag or not cfg.allow_conversion:
            return SKIP
        return Direction.FORWARD
    prefix, suffix = shared_anchor(w1.form, w2.form)
    if prefix >= cfg.min_anchor:
        return Direction.FORWARD
    if suffix >= cfg.min_anchor:
        return Direction.BACKWARD
    return SKIP


def _walk(f1: str, f2: str):
    """Position-by-position comparison of two left-aligned forms."""
    sim1, sim2, dif1, dif2 = [], [], [], []
    pos1, pos2 = [], []  # 0-based positions of dif literals within each form
    m = min(len(f1), len(f2))
    for i in range(m):
        a, b = f1[i], f2[i]
        if a == b:
            sim1.append(a)
            sim2.append(b)
            if not dif1 or dif1[-1] is not VAR:
                dif1.append(VAR)
                dif2.append(VAR)
        else:
            dif1.append(a)
            pos1.append(i)
            dif2.append(b)
            pos2.append(i)
            sim1.append(REQUIRED)
            sim2.append(REQUIRED)
    for i in range(m, len(f1)):
        dif1.append(f1[i])
        pos1.append(i)
        sim1.append(REQUIRED)
    for i in range(m, len(f2)):
        dif2.append(f2[i])
        pos2.append(i)
        sim2.append(REQUIRED)
    return sim1, sim2, dif1, dif2, pos1, pos2


def compare_pair(w1: TaggedWord, w2: TaggedWord, direction: Direction,
                 id1: int = 0, id2: int = 1) -> ComparisonRecord:
    """Produce a fresh single-witness comparison record for a word pair."""
    f1, f2 = w1.form, w2.form
    if direction is Direction.BACKWARD:
        sim1, sim2, dif1, dif2, pos1, pos2 = _walk(f1[::-1], f2[::-1])
        sim1.reverse()
        sim2.reverse()
        dif1.reverse()
        dif2.reverse()
        # reversed-frame position p sits at original index len-1-p, which is
        # its offset from the (left) difference edge; reversing the dif list
        # reversed the literal order too, so reverse the offsets with it.
        off1 = tuple(len(f1) - 1 - p for p in reversed(pos1))
        off2 = tuple(len(f2) - 1 - p for p in reversed(pos2))
    else:
        # offsets from the (right) difference edge, in dif-literal order
        sim1, sim2, dif1, dif2, pos1, pos2 = _walk(f1, f2)
        off1 = tuple(len(f1) - 1 - p for p in pos1)
        off2 = tuple(len(f2) - 1 - p for p in pos2)
    return ComparisonRecord(
        dif1=tuple(dif1), cat1=w1.tag,
        dif2=tuple(dif2), cat2=w2.tag,
        sim1=tuple(sim1), sim2=tuple(sim2),
        direction=direction,
        offsets1=off1, offsets2=off2,
        witnesses=((id1, id2),),
    )
