"""Exact-match exception lexicon for words the rules divide wrongly.

File format: UTF-8, one ``word<TAB>syl-la-bles`` entry per line, ``#``
comments and blank lines ignored.  Later duplicates override earlier ones.
"""

from __future__ import annotations

import io
import os
import warnings
from importlib import resources
from typing import IO, Iterator, Mapping, Union

from .alphabet import MIXED, detect_script, normalize_text, segment_graphemes
from .errors import ConcatMismatch, ParseError, UnknownCharacter

PathOrStream = Union[str, "os.PathLike[str]", IO[str]]


class ExceptionLexicon(Mapping[str, tuple]):
    """Immutable mapping of lowercase normalized word -> tuple of syllable strings."""

    def __init__(self, entries: Mapping[str, tuple] | None = None):
        self._entries = dict(entries or {})

    def __getitem__(self, key: str) -> tuple:
        return self._entries[key]

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        return f"ExceptionLexicon({len(self)} entries)"

    def lookup(self, word: str) -> tuple | None:
        return self._entries.get(normalize_text(word).lower())

    def boundaries(self, word: str) -> list[int] | None:
        """Grapheme boundary indices of the stored division of ``word``."""
        syllables = self.lookup(word)
        if syllables is None:
            return None
        script = detect_script(syllables[0])
        out, pos = [], 0
        for syl in syllables[:-1]:
            pos += len(segment_graphemes(syl, script))
            out.append(pos)
        return out


def _open(source: PathOrStream) -> IO[str]:
    if isinstance(source, (str, os.PathLike)):
        return open(source, encoding="utf-8")
    return source


def parse_division(headword: str, division: str, lineno: int) -> tuple:
    """Validate a hyphen-marked division against its headword."""
    syllables = tuple(division.split("-"))
    if not all(syllables):
        raise ParseError(lineno, f"empty syllable in {division!r}")
    if "".join(syllables) != headword:
        raise ConcatMismatch(lineno, f"{division!r} does not spell {headword!r}")
    script = detect_script(headword)
    if script == MIXED:
        raise ParseError(lineno, f"{headword!r} mixes scripts")
    try:
        for syl in syllables:
            segment_graphemes(syl, script)
    except UnknownCharacter as exc:
        raise ParseError(lineno, str(exc)) from None
    return syllables


def load_lexicon(source: PathOrStream) -> ExceptionLexicon:
    """Read an exception lexicon from a path or text stream.

    Raises :class:`ParseError` on a malformed line and
    :class:`ConcatMismatch` when a division does not spell its headword.
    """
    stream = _open(source)
    entries: dict[str, tuple] = {}
    try:
        for lineno, line in enumerate(stream, 1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2 or not fields[0].strip() or not fields[1].strip():
                raise ParseError(lineno, f"expected 'word<TAB>division', got {line!r}")
            headword = normalize_text(fields[0].strip()).lower()
            division = normalize_text(fields[1].strip()).lower()
            syllables = parse_division(headword, division, lineno)
            if headword in entries:
                warnings.warn(f"line {lineno}: duplicate entry {headword!r} overrides earlier one", stacklevel=2)
            entries[headword] = syllables
    finally:
        if stream is not source:
            stream.close()
    return ExceptionLexicon(entries)


def bundled_lexicon() -> ExceptionLexicon:
    """The loanword exception list shipped with the package."""
    text = resources.files("uzsyllable").joinpath("data/loanwords.tsv").read_text(encoding="utf-8")
    return load_lexicon(io.StringIO(text))
