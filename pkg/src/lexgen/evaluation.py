"""Precision measurement against a reference word list and strategy-table
rendering."""

from __future__ import annotations

from dataclasses import dataclass

from lexgen.comparison import render_dif, render_sim
from lexgen.lexio import Lexicon

UNATTESTED_SAMPLE_SIZE = 10


@dataclass(frozen=True)
class PrecisionReport:
    generated: int
    attested: int
    precision: float | None  # None marks "no new words"
    unattested_sample: tuple


def precision(new_words, reference, match_tags: bool = False) -> PrecisionReport:
    """Fraction of generated words found in the reference list.

    ``reference`` holds bare forms, or ``form,TAG`` strings when
    ``match_tags`` is set.  With no generated words the ratio is undefined
    and reported as None.
    """
    words = list(new_words)
    unattested = []
    attested = 0
    for word in words:
        key = word.render() if match_tags else word.form
        if key in reference:
            attested += 1
        elif len(unattested) < UNATTESTED_SAMPLE_SIZE:
            unattested.append(word.form)
    generated = len(words)
    ratio = attested / generated if generated else None
    return PrecisionReport(
        generated=generated,
        attested=attested,
        precision=ratio,
        unattested_sample=tuple(unattested),
    )


STRATEGY_TABLE_HEADER = (
    "dif1\tcat1\tdif2\tcat2\tsim1\tsim2\tcount\texamples"
)


def strategy_table(strategies, lex: Lexicon | None = None) -> str:
    """TSV dump of strategies, sorted by descending count then key."""
    lines = [STRATEGY_TABLE_HEADER]
    ordered = sorted(strategies, key=lambda s: (-s.count, s.key.sort_tuple()))
    for s in ordered:
        examples = []
        for a, b in s.witnesses[:3]:
            if lex is not None:
                examples.append(f"{lex[a].form}/{lex[b].form}")
            else:
                examples.append(f"{a}/{b}")
        lines.append("\t".join([
            render_dif(s.key.dif1), s.key.cat1,
            render_dif(s.key.dif2), s.key.cat2,
            render_sim(s.sim1), render_sim(s.sim2),
            str(s.count), "; ".join(examples),
        ]))
    return "\n".join(lines)
