"""Word generation: unify lexicon words with strategy sides, splice the
other side's difference material in, optionally block candidates whose
source paradigm already contains a word of the candidate's category, and
run iteration cycles."""

from __future__ import annotations

from dataclasses import dataclass, field

from lexgen.comparison import OPTIONAL, VAR, CompareConfig, Direction
from lexgen.induction import (
    ParadigmIndex,
    Strategy,
    accumulate,
    build_paradigms,
    extract_strategies,
)
from lexgen.lexio import Lexicon, TaggedWord


@dataclass(frozen=True)
class MatchBinding:
    side: int
    variable_material: str


@dataclass(frozen=True)
class GenerationOptions:
    blocking: bool = False
    cycles: int = 1
    # later cycles reuse cycle-1 strategies instead of re-discovering
    reapply_only: bool = False


@dataclass
class GenerationReport:
    new_words: list = field(default_factory=list)
    blocked: list = field(default_factory=list)
    regenerated_count: int = 0
    per_strategy_counts: dict = field(default_factory=dict)
    # first creator's source for each new word, used when cycling
    sources: dict = field(default_factory=dict)


def _required_len(sim) -> int:
    return sum(1 for slot in sim if slot is not OPTIONAL)


def unify(word: TaggedWord, strategy: Strategy, side: int):
    """Match a word against one side of a strategy.

    Returns a MatchBinding carrying the material covered by the variable
    (everything except the difference literals), or None.
    """
    tag, dif, offsets, sim = strategy.side(side)
    if word.tag != tag:
        return None
    form = word.form
    n = len(form)
    required = _required_len(sim)
    if not required <= n <= len(sim):
        return None
    forward = strategy.direction is Direction.FORWARD

    def pos(off):
        return n - 1 - off if forward else off

    literal_positions = set()
    k = 0
    for symbol in dif:
        if symbol is VAR:
            continue
        p = pos(offsets[k])
        k += 1
        if form[p] != symbol:
            return None
        literal_positions.add(p)
    for off in range(required):
        slot = sim[len(sim) - 1 - off] if forward else sim[off]
        if isinstance(slot, str) and form[pos(off)] != slot:
            return None
    variable = "".join(
        c for idx, c in enumerate(form) if idx not in literal_positions
    )
    return MatchBinding(side=side, variable_material=variable)


def create(word: TaggedWord, strategy: Strategy, side: int,
           binding: MatchBinding) -> TaggedWord:
    """Map a unified word onto the other side of the strategy."""
    other = 2 if side == 1 else 1
    tag, dif, offsets, _sim = strategy.side(other)
    literals = [s for s in dif if s is not VAR]
    m = len(binding.variable_material) + len(literals)
    forward = strategy.direction is Direction.FORWARD
    slots: list = [None] * m
    for literal, off in zip(literals, offsets):
        slots[m - 1 - off if forward else off] = literal
    material = iter(binding.variable_material)
    for idx in range(m):
        if slots[idx] is None:
            slots[idx] = next(material)
    return TaggedWord("".join(slots), tag)


def _blocking_witness(source: TaggedWord, candidate: TaggedWord,
                      paradigms: ParadigmIndex, lex: Lexicon):
    source_root = paradigms.find(lex.id_of(source))
    for idx, entry in enumerate(lex):
        if entry.tag == candidate.tag and paradigms.find(idx) == source_root:
            return entry
    return None


def is_blocked(source: TaggedWord, candidate: TaggedWord,
               paradigms: ParadigmIndex, lex: Lexicon) -> bool:
    """True iff the source's paradigm already holds a word of the
    candidate's category."""
    return _blocking_witness(source, candidate, paradigms, lex) is not None


def generate(lex: Lexicon, strategies, paradigms: ParadigmIndex,
             opts: GenerationOptions) -> GenerationReport:
    """Apply every strategy to every lexicon word, in fixed order.

    Creations already in the lexicon count as regenerations; duplicates of
    earlier new words are skipped; with blocking on, candidates whose
    source paradigm holds their category are diverted to ``blocked``.
    ``per_strategy_counts`` credits every creation beyond the lexicon,
    including different strategies producing the same word.
    """
    report = GenerationReport()
    emitted: set[TaggedWord] = set()
    for word in lex:
        for strategy in strategies:
            for side in (1, 2):
                binding = unify(word, strategy, side)
                if binding is None:
                    continue
                candidate = create(word, strategy, side, binding)
                if candidate in lex:
                    report.regenerated_count += 1
                    continue
                counts = report.per_strategy_counts
                counts[strategy.strategy_id] = counts.get(strategy.strategy_id, 0) + 1
                if candidate in emitted:
                    continue
                if opts.blocking:
                    witness = _blocking_witness(word, candidate, paradigms, lex)
                    if witness is not None:
                        report.blocked.append((candidate, witness))
                        continue
                emitted.add(candidate)
                report.new_words.append(candidate)
                report.sources[candidate] = word
    return report


def run_pipeline(lex: Lexicon, cfg: CompareConfig, opts: GenerationOptions,
                 min_support: int, jobs: int = 1):
    """Full learn-and-generate run over ``opts.cycles`` cycles.

    Returns (aggregate report, cycle-1 strategies).  Later cycles fold the
    new words into the working lexicon (each joining its source word's
    paradigm) and either re-discover strategies or reapply cycle 1's.
    """
    if opts.cycles < 1:
        raise ValueError("cycles must be >= 1")
    working = Lexicon(lex.entries)
    records = accumulate(working, cfg, jobs=jobs)
    strategies = extract_strategies(records, min_support)
    paradigms = build_paradigms(strategies, working)
    first_strategies = strategies

    total = GenerationReport()
    seen: set[TaggedWord] = set()
    single = GenerationOptions(blocking=opts.blocking, cycles=1,
                               reapply_only=opts.reapply_only)
    for cycle in range(opts.cycles):
        if cycle > 0:
            if not opts.reapply_only:
                records = accumulate(working, cfg, jobs=jobs)
                strategies = extract_strategies(records, min_support)
                paradigms = build_paradigms(strategies, working)
                for word in working:
                    source = total.sources.get(word)
                    if source is not None:
                        paradigms.union(working.id_of(source), working.id_of(word))
        report = generate(working, strategies, paradigms, single)
        total.regenerated_count += report.regenerated_count
        total.blocked.extend(report.blocked)
        for sid, n in report.per_strategy_counts.items():
            total.per_strategy_counts[sid] = total.per_strategy_counts.get(sid, 0) + n
        fresh = [w for w in report.new_words if w not in seen]
        for word in fresh:
            seen.add(word)
            total.new_words.append(word)
            total.sources[word] = report.sources[word]
        if not fresh:
            break
        if cycle + 1 < opts.cycles:
            for word in fresh:
                new_id = working.add(word)
                if opts.reapply_only:
                    added = paradigms.add()
                    assert added == new_id
                    paradigms.union(working.id_of(total.sources[word]), new_id)
    return total, first_strategies


def run_cycles(lex: Lexicon, cfg: CompareConfig, opts: GenerationOptions,
               min_support: int, jobs: int = 1) -> GenerationReport:
    report, _ = run_pipeline(lex, cfg, opts, min_support, jobs=jobs)
    return report
