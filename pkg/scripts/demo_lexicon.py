"""Learn strategies from a small English lexicon and show the results.

Useful as a quick end-to-end smoke check: prints the strategy table, the
generated words, and what blocking would have suppressed.
"""

import argparse

from lexgen import (
    CompareConfig,
    GenerationOptions,
    accumulate,
    build_paradigms,
    extract_strategies,
    generate,
    strategy_table,
)
from lexgen.lexio import parse_lexicon

DEMO_LEXICON = """\
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
"""


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lexicon", help="tagged lexicon file; omit for the demo data")
    parser.add_argument("--min-support", type=int, default=3)
    parser.add_argument("--blocking", action="store_true")
    args = parser.parse_args()

    if args.lexicon:
        with open(args.lexicon, encoding="utf-8") as handle:
            lex = parse_lexicon(handle.read())
    else:
        lex = parse_lexicon(DEMO_LEXICON)

    cfg = CompareConfig()
    strategies = extract_strategies(accumulate(lex, cfg), args.min_support)
    paradigms = build_paradigms(strategies, lex)
    print(strategy_table(strategies, lex))
    print()

    report = generate(lex, strategies, paradigms,
                      GenerationOptions(blocking=args.blocking))
    print(f"regenerated {report.regenerated_count} existing words")
    print(f"generated {len(report.new_words)} new words:")
    for word in report.new_words:
        print(f"  {word.render()}")
    if report.blocked:
        print(f"blocked {len(report.blocked)} candidates:")
        for candidate, witness in report.blocked:
            print(f"  {candidate.render()} (paradigm has {witness.render()})")


if __name__ == "__main__":
    main()
