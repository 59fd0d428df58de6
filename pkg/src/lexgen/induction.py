"""Accumulate comparison records, merge them into strategies, threshold,
and build the paradigm partition.

Records with identical difference patterns (and identical literal offsets
from the difference edge) are merged: the similarity templates are aligned
at the difference edge and taken positionwise to their meet, so each
strategy stays maximally restricted while still admitting every witness.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass

from lexgen.comparison import (
    OPTIONAL,
    REQUIRED,
    CompareConfig,
    ComparisonRecord,
    Direction,
    compare_pair,
    render_dif,
    select_direction,
)
from lexgen.lexio import Lexicon


@dataclass(frozen=True)
class StrategyKey:
    """Merge identity of a record: differences, categories, direction, and
    the dif-literal offsets, with sides in canonical order."""

    dif1: tuple
    cat1: str
    dif2: tuple
    cat2: str
    direction: Direction
    offsets1: tuple
    offsets2: tuple

    def sort_tuple(self):
        return (
            self.direction.value,
            self.cat1, render_dif(self.dif1), self.offsets1,
            self.cat2, render_dif(self.dif2), self.offsets2,
        )


@dataclass(frozen=True)
class Strategy:
    """A merged comparison record promoted past the support threshold; a
    bidirectional word-formation rule."""

    key: StrategyKey
    sim1: tuple
    sim2: tuple
    witnesses: tuple
    strategy_id: int

    @property
    def count(self) -> int:
        return len(self.witnesses)

    @property
    def direction(self) -> Direction:
        return self.key.direction

    def side(self, which: int):
        """(tag, dif, offsets, sim) for side 1 or 2."""
        if which == 1:
            return self.key.cat1, self.key.dif1, self.key.offsets1, self.sim1
        if which == 2:
            return self.key.cat2, self.key.dif2, self.key.offsets2, self.sim2
        raise ValueError(f"side must be 1 or 2, got {which}")


def _side_order_key(cat, dif, offsets):
    return (cat, render_dif(dif), offsets)


def canonicalize(record: ComparisonRecord) -> ComparisonRecord:
    """Swap sides if needed so that equivalent records fold to one key."""
    if record.cat1 != record.cat2:
        return record.swapped() if record.cat2 < record.cat1 else record
    k1 = _side_order_key(record.cat1, record.dif1, record.offsets1)
    k2 = _side_order_key(record.cat2, record.dif2, record.offsets2)
    if k2 < k1:
        return record.swapped()
    return record


def canonical_key(record: ComparisonRecord) -> StrategyKey:
    r = canonicalize(record)
    return StrategyKey(
        dif1=r.dif1, cat1=r.cat1, dif2=r.dif2, cat2=r.cat2,
        direction=r.direction, offsets1=r.offsets1, offsets2=r.offsets2,
    )


def _merge_sims(s1: tuple, s2: tuple, direction: Direction) -> tuple:
    """Positionwise meet of two templates aligned at the difference edge."""
    forward = direction is Direction.FORWARD
    a = s1[::-1] if forward else s1
    b = s2[::-1] if forward else s2
    if len(a) < len(b):
        a, b = b, a
    shared = len(b)
    merged = []
    for off in range(len(a)):
        if off >= shared:
            merged.append(OPTIONAL)
            continue
        x, y = a[off], b[off]
        if x is OPTIONAL or y is OPTIONAL:
            merged.append(OPTIONAL)
        elif x == y and x is not REQUIRED:
            merged.append(x)
        else:
            merged.append(REQUIRED)
    if forward:
        merged.reverse()
    return tuple(merged)


def merge_records(a: ComparisonRecord, b: ComparisonRecord) -> ComparisonRecord:
    """Fold two records sharing a canonical key into one."""
    if canonical_key(a) != canonical_key(b):
        raise ValueError("cannot merge records with different keys")
    a = canonicalize(a)
    b = canonicalize(b)
    witnesses = tuple(dict.fromkeys(a.witnesses + b.witnesses))
    return ComparisonRecord(
        dif1=a.dif1, cat1=a.cat1, dif2=a.dif2, cat2=a.cat2,
        sim1=_merge_sims(a.sim1, b.sim1, a.direction),
        sim2=_merge_sims(a.sim2, b.sim2, a.direction),
        direction=a.direction,
        offsets1=a.offsets1, offsets2=a.offsets2,
        witnesses=witnesses,
    )


def _merge_canonical(a: ComparisonRecord, b: ComparisonRecord) -> ComparisonRecord:
    """merge_records for records already canonicalized and known to share a key."""
    return ComparisonRecord(
        dif1=a.dif1, cat1=a.cat1, dif2=a.dif2, cat2=a.cat2,
        sim1=_merge_sims(a.sim1, b.sim1, a.direction),
        sim2=_merge_sims(a.sim2, b.sim2, a.direction),
        direction=a.direction,
        offsets1=a.offsets1, offsets2=a.offsets2,
        witnesses=tuple(dict.fromkeys(a.witnesses + b.witnesses)),
    )


def _tuple_key(record: ComparisonRecord) -> tuple:
    return (record.direction, record.cat1, record.dif1, record.offsets1,
            record.cat2, record.dif2, record.offsets2)


def _fold(records: dict, record: ComparisonRecord) -> None:
    """Fold a record into a map keyed by the cheap tuple form of its key."""
    record = canonicalize(record)
    key = _tuple_key(record)
    existing = records.get(key)
    records[key] = record if existing is None else _merge_canonical(existing, record)


def _accumulate_rows(lex: Lexicon, cfg: CompareConfig, rows) -> dict:
    records: dict[tuple, ComparisonRecord] = {}
    n = len(lex)
    min_anchor = cfg.min_anchor
    forms = [w.form for w in lex.entries]
    for i in rows:
        w1 = lex[i]
        f1 = forms[i]
        # conservative pre-filter: a qualifying anchor implies one of these
        head = f1[:min_anchor]
        tail = f1[-min_anchor:]
        for j in range(i + 1, n):
            f2 = forms[j]
            if not (f2.startswith(head) or f2.endswith(tail)):
                continue
            w2 = lex[j]
            direction = select_direction(w1, w2, cfg)
            if direction is None:
                continue
            _fold(records, compare_pair(w1, w2, direction, i, j))
    return records


def accumulate(lex: Lexicon, cfg: CompareConfig, jobs: int = 1) -> dict:
    """Compare every unordered pair once and fold records by canonical key.

    The fold is commutative and associative, so the result is independent
    of enumeration order and of how work is split across ``jobs`` workers.
    """
    n = len(lex)
    if jobs <= 1 or n < 64:
        records = _accumulate_rows(lex, cfg, range(n))
    else:
        # Interleave rows so chunks carry comparable amounts of work.
        chunks = [range(k, n, jobs) for k in range(jobs)]
        records = {}
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for partial in pool.map(_accumulate_rows, [lex] * jobs, [cfg] * jobs,
                                    chunks):
                for record in partial.values():
                    _fold(records, record)
    return {canonical_key(r): r for r in records.values()}


def extract_strategies(records: dict, min_support: int) -> list[Strategy]:
    """Keep records with enough witnesses; assign ids in deterministic key order."""
    if min_support < 1:
        raise ValueError("min_support must be >= 1")
    kept = [(k, r) for k, r in records.items() if r.count >= min_support]
    kept.sort(key=lambda kr: kr[0].sort_tuple())
    return [
        Strategy(key=k, sim1=r.sim1, sim2=r.sim2, witnesses=r.witnesses,
                 strategy_id=i)
        for i, (k, r) in enumerate(kept, start=1)
    ]


class ParadigmIndex:
    """Union-find partition of lexicon ids into paradigms."""

    def __init__(self, size: int):
        self._parent = list(range(size))

    def __len__(self) -> int:
        return len(self._parent)

    def add(self) -> int:
        idx = len(self._parent)
        self._parent.append(idx)
        return idx

    def find(self, i: int) -> int:
        root = i
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[i] != root:
            self._parent[i], i = root, self._parent[i]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller id wins the root for determinism
            if rb < ra:
                ra, rb = rb, ra
            self._parent[rb] = ra

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)


def build_paradigms(strategies, lex: Lexicon) -> ParadigmIndex:
    """Close the witness relation of all kept strategies into a partition."""
    index = ParadigmIndex(len(lex))
    for strategy in strategies:
        for a, b in strategy.witnesses:
            index.union(a, b)
    return index
