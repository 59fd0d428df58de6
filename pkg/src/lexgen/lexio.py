"""Reading and writing of tagged word lists.

Input format: one ``form,TAG`` entry per line, UTF-8, no quoting.  Lines
starting with ``//`` are comments; blank lines are ignored.  Forms are
NFC-normalized so that accented characters compare position by position.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

COMMENT_PREFIX = "//"


class LexiconParseError(ValueError):
    """Raised for a malformed lexicon line; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class TaggedWord:
    form: str
    tag: str

    def render(self) -> str:
        return f"{self.form},{self.tag}"


class Lexicon:
    """Ordered, duplicate-free list of tagged words with stable integer ids."""

    def __init__(self, entries=()):
        self.entries: list[TaggedWord] = []
        self._index: dict[tuple[str, str], int] = {}
        for entry in entries:
            self.add(entry)

    def add(self, entry: TaggedWord) -> int:
        key = (entry.form, entry.tag)
        existing = self._index.get(key)
        if existing is not None:
            return existing
        idx = len(self.entries)
        self.entries.append(entry)
        self._index[key] = idx
        return idx

    def id_of(self, entry: TaggedWord) -> int:
        return self._index[(entry.form, entry.tag)]

    def __contains__(self, entry: TaggedWord) -> bool:
        return (entry.form, entry.tag) in self._index

    def __getitem__(self, idx: int) -> TaggedWord:
        return self.entries[idx]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, Lexicon) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"Lexicon({len(self.entries)} entries)"


def _check_tag(tag: str, line_no: int) -> None:
    if not tag:
        raise LexiconParseError(line_no, "empty tag")
    if "," in tag:
        raise LexiconParseError(line_no, f"tag contains a comma: {tag!r}")
    if any(c.isspace() for c in tag):
        raise LexiconParseError(line_no, f"tag contains whitespace: {tag!r}")
    if "#" in tag or "*" in tag:
        raise LexiconParseError(line_no, f"tag contains a pattern symbol: {tag!r}")


def parse_lexicon(text: str, lowercase: bool = False) -> Lexicon:
    """Parse a ``form,TAG`` document into a Lexicon.

    Exact duplicate (form, tag) lines are silently dropped; order of first
    occurrence is preserved.  Raises LexiconParseError on malformed lines.
    """
    lex = Lexicon()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = unicodedata.normalize("NFC", raw).strip()
        if not line or line.startswith(COMMENT_PREFIX):
            continue
        if "," not in line:
            raise LexiconParseError(line_no, f"expected 'form,TAG', got {raw!r}")
        form, tag = line.split(",", 1)
        form = form.strip()
        tag = tag.strip()
        if not form:
            raise LexiconParseError(line_no, "empty form")
        _check_tag(tag, line_no)
        if lowercase:
            form = form.lower()
        lex.add(TaggedWord(form, tag))
    return lex


def write_words(words) -> str:
    """Serialize tagged words, one per line, sorted by (form, tag)."""
    ordered = sorted(words, key=lambda w: (w.form, w.tag))
    return "\n".join(w.render() for w in ordered)
