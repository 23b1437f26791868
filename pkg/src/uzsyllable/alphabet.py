"""Letter inventories for both Uzbek scripts, apostrophe cleanup and grapheme segmentation.

Latin Uzbek writes four letters with two codepoints: ``oʻ``, ``gʻ``, ``sh`` and
``ch``.  Everything downstream works on :class:`Grapheme` objects so that a
digraph can never be split by a syllable or hyphenation boundary.

>>> [g.text for g in segment_graphemes("bugʻlatkich", Script.LATIN)]
['b', 'u', 'gʻ', 'l', 'a', 't', 'k', 'i', 'ch']
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Union

from .errors import UnknownCharacter

#: Canonical modifier of oʻ and gʻ (MODIFIER LETTER TURNED COMMA).
OKINA = "ʻ"
#: Canonical tutuq belgisi, the glottal-stop sign (MODIFIER LETTER APOSTROPHE).
TUTUQ = "ʼ"

APOSTROPHES = frozenset("'`´‘’ʻʼ")
MARKS = frozenset((OKINA, TUTUQ))


class Script(str, Enum):
    LATIN = "latin"
    CYRILLIC = "cyrillic"


#: Returned by :func:`detect_script` when a token mixes (or lacks) script letters.
MIXED = "mixed"


class GraphemeClass(str, Enum):
    VOWEL = "vowel"
    CONSONANT = "consonant"
    SIGN = "sign"


@dataclass(frozen=True)
class Grapheme:
    text: str
    cls: GraphemeClass
    script: Script

    @property
    def is_vowel(self) -> bool:
        return self.cls is GraphemeClass.VOWEL

    @property
    def is_sign(self) -> bool:
        return self.cls is GraphemeClass.SIGN

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Inventory:
    """Lowercase letter tables of one script."""

    script: Script
    vowels: frozenset
    consonants: frozenset
    signs: frozenset
    digraphs: tuple  # longest first

    def lookup(self, letter: str) -> GraphemeClass | None:
        key = letter.lower()
        if key in self.vowels:
            return GraphemeClass.VOWEL
        if key in self.consonants:
            return GraphemeClass.CONSONANT
        if key in self.signs:
            return GraphemeClass.SIGN
        return None


_LATIN_DIGRAPHS = ("o" + OKINA, "g" + OKINA, "sh", "ch")

LATIN = Inventory(
    script=Script.LATIN,
    vowels=frozenset(["a", "e", "i", "o", "u", "o" + OKINA]),
    consonants=frozenset("bdfghjklmnpqrstvxyz") | {"g" + OKINA, "sh", "ch"},
    signs=frozenset([TUTUQ]),
    digraphs=_LATIN_DIGRAPHS,
)

# "ng" kept as an opt-in: treating it atomically mis-divides men+ga.
LATIN_NG = Inventory(
    script=Script.LATIN,
    vowels=LATIN.vowels,
    consonants=LATIN.consonants | {"ng"},
    signs=LATIN.signs,
    digraphs=_LATIN_DIGRAPHS + ("ng",),
)

CYRILLIC = Inventory(
    script=Script.CYRILLIC,
    vowels=frozenset("аеёиоуўэюя"),
    consonants=frozenset("бвгджзйклмнпрстфхцчшқғҳ"),
    signs=frozenset("ъь"),
    digraphs=(),
)

INVENTORIES = {Script.LATIN: LATIN, Script.CYRILLIC: CYRILLIC}


def inventory(script: Script, ng_digraph: bool = False) -> Inventory:
    if script is Script.LATIN and ng_digraph:
        return LATIN_NG
    return INVENTORIES[Script(script)]


@lru_cache(maxsize=4096)
def _is_latin_letter(ch: str) -> bool:
    return ch.isalpha() and unicodedata.name(ch, "").startswith("LATIN")


def _is_cyrillic(ch: str) -> bool:
    return "Ѐ" <= ch <= "ӿ"


def normalize_text(raw: str) -> str:
    """Canonicalize apostrophe variants around Latin letters.

    An apostrophe-like character right after ``o``/``g`` becomes the oʻ/gʻ
    modifier U+02BB; any other one touching a Latin letter becomes the tutuq
    U+02BC.  Text is also NFC-composed so that decomposed Cyrillic letters
    (``й``, ``ё``) match the inventory.

    >>> normalize_text("o’zbek")
    'oʻzbek'
    >>> normalize_text("ma'no")
    'maʼno'
    """
    text = unicodedata.normalize("NFC", raw)
    if not any(ch in APOSTROPHES for ch in text):
        return text
    out = []
    last = len(text) - 1
    for i, ch in enumerate(text):
        if ch in APOSTROPHES:
            prev = text[i - 1] if i > 0 else ""
            nxt = text[i + 1] if i < last else ""
            if prev and prev in "oOgG":
                ch = OKINA
            elif (prev and _is_latin_letter(prev)) or (nxt and _is_latin_letter(nxt)):
                ch = TUTUQ
        out.append(ch)
    return "".join(out)


def detect_script(token_text: str) -> Union[Script, str]:
    """Return the script of ``token_text``, or :data:`MIXED`."""
    has_latin = any(_is_latin_letter(ch) for ch in token_text)
    has_cyrillic = any(_is_cyrillic(ch) for ch in token_text)
    if has_cyrillic and not has_latin:
        return Script.CYRILLIC
    if has_latin and not has_cyrillic:
        return Script.LATIN
    return MIXED


def segment_graphemes(word: str, script: Script, ng_digraph: bool = False) -> list[Grapheme]:
    """Split a normalized word into graphemes, matching digraphs longest-first.

    Matching is case-insensitive and the original case is kept in
    ``Grapheme.text``.  A tutuq between two letters keeps them apart
    (``sʼh`` is ``s``, ``ʼ``, ``h``).

    Raises
    ------
    UnknownCharacter
        If ``word`` holds a codepoint outside the script inventory.
    """
    inv = inventory(script, ng_digraph)
    out: list[Grapheme] = []
    i = 0
    n = len(word)
    while i < n:
        for digraph in inv.digraphs:
            size = len(digraph)
            if word[i:i + size].lower() == digraph:
                chunk = word[i:i + size]
                break
        else:
            chunk = word[i]
        cls = inv.lookup(chunk)
        if cls is None:
            raise UnknownCharacter(word, i)
        out.append(Grapheme(chunk, cls, inv.script))
        i += len(chunk)
    return out


def classify(g: Grapheme) -> GraphemeClass:
    """Inventory class of ``g``, ignoring case."""
    cls = inventory(g.script, ng_digraph=True).lookup(g.text)
    if cls is None:
        raise UnknownCharacter(g.text, 0)
    return cls


def to_ascii_apostrophe(text: str) -> str:
    """Render both canonical marks as U+0027 for legacy consumers."""
    return text.replace(OKINA, "'").replace(TUTUQ, "'")
