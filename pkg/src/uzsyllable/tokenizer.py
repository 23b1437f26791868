"""Splitting normalized text into word, passthrough and separator tokens."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .alphabet import MARKS, MIXED, Grapheme, Script, detect_script, segment_graphemes
from .errors import AnnotationMismatch, UnknownCharacter


class TokenKind(str, Enum):
    WORD = "word"
    PASSTHROUGH = "passthrough"
    SEPARATOR = "separator"


class Reason(str, Enum):
    ACRONYM = "acronym"
    CONTAINS_DIGIT = "contains_digit"
    SYMBOL = "symbol"
    NO_VOWEL = "no_vowel"
    MIXED_SCRIPT = "mixed_script"
    UNKNOWN_CHARACTER = "unknown_character"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    reason: Optional[Reason] = None
    graphemes: tuple[Grapheme, ...] = ()
    script: Optional[Script] = None

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD


def _is_word_char(ch: str) -> bool:
    if ch in MARKS:
        return False
    return ch.isalnum() or unicodedata.category(ch).startswith("M")


def _is_symbol(ch: str) -> bool:
    return unicodedata.category(ch).startswith("S")


def _spans(text: str):
    """Yield ``(is_candidate, start, end)`` spans covering ``text``.

    A candidate is a run of letters/digits; a canonical mark joins the run
    when it follows a word character and is either internal or the last
    character of the run.  Marks that open a run are separators.

    ``is_candidate`` is None for runs of symbol characters (currency, math,
    emoji), which are kept as passthrough rather than separators.
    """
    n = len(text)
    i = 0
    while i < n:
        start = i
        if _is_word_char(text[i]):
            while i < n:
                if _is_word_char(text[i]):
                    i += 1
                elif text[i] in MARKS and _is_word_char(text[i - 1]):
                    i += 1
                else:
                    break
            yield True, start, i
        else:
            symbol = _is_symbol(text[i])
            while i < n and not _is_word_char(text[i]) and _is_symbol(text[i]) == symbol:
                i += 1
            yield None if symbol else False, start, i


def _classify_candidate(text: str, script: Optional[Script], ng_digraph: bool) -> Token:
    if any(ch.isdigit() for ch in text):
        return Token(TokenKind.PASSTHROUGH, text, Reason.CONTAINS_DIGIT)
    letters = [ch for ch in text if ch.isalpha() and ch not in MARKS]
    if len(letters) >= 2 and all(ch.isupper() for ch in letters):
        return Token(TokenKind.PASSTHROUGH, text, Reason.ACRONYM)
    detected = detect_script(text)
    if detected == MIXED:
        return Token(TokenKind.PASSTHROUGH, text, Reason.MIXED_SCRIPT)
    resolved = Script(script) if script is not None else detected
    try:
        graphemes = tuple(segment_graphemes(text, resolved, ng_digraph))
    except UnknownCharacter:
        return Token(TokenKind.PASSTHROUGH, text, Reason.UNKNOWN_CHARACTER)
    if not any(g.is_vowel for g in graphemes):
        return Token(TokenKind.PASSTHROUGH, text, Reason.NO_VOWEL)
    return Token(TokenKind.WORD, text, graphemes=graphemes, script=resolved)


def tokenize(text: str, script: Optional[Script] = None, ng_digraph: bool = False) -> list[Token]:
    """Tokenize already normalized text.

    ``script`` forces the script of every word; by default it is detected
    per token.  Words that cannot be syllabified come back as passthrough
    tokens carrying a :class:`Reason`.

    >>> [(t.kind.value, t.text) for t in tokenize("ona-bola!")]
    [('word', 'ona'), ('separator', '-'), ('word', 'bola'), ('separator', '!')]
    """
    tokens = []
    for is_candidate, start, end in _spans(text):
        chunk = text[start:end]
        if is_candidate:
            tokens.append(_classify_candidate(chunk, script, ng_digraph))
        elif is_candidate is None:
            tokens.append(Token(TokenKind.PASSTHROUGH, chunk, Reason.SYMBOL))
        else:
            tokens.append(Token(TokenKind.SEPARATOR, chunk))
    return tokens


def _render_word(token: Token, boundaries: Sequence[int], mark: str) -> str:
    graphemes = token.graphemes
    if not boundaries:
        return token.text
    cuts = sorted(set(boundaries))
    if cuts[0] < 1 or cuts[-1] > len(graphemes) - 1:
        raise AnnotationMismatch(f"boundary out of range for {token.text!r}: {list(boundaries)}")
    pieces = []
    prev = 0
    for cut in cuts + [len(graphemes)]:
        pieces.append("".join(g.text for g in graphemes[prev:cut]))
        prev = cut
    return mark.join(pieces)


def detokenize(
    tokens: Sequence[Token],
    annotations: Optional[Sequence[Sequence[int]]] = None,
    mark: str = "-",
) -> str:
    """Reassemble tokens, inserting ``mark`` at syllable boundaries.

    ``annotations`` holds one list of grapheme boundary indices per word
    token, in order.  Without annotations the text is returned as is.
    """
    if not annotations:
        return "".join(t.text for t in tokens)
    n_words = sum(1 for t in tokens if t.is_word)
    if len(annotations) != n_words:
        raise AnnotationMismatch(f"{len(annotations)} annotations for {n_words} words")
    out = []
    words = iter(annotations)
    for token in tokens:
        if token.is_word:
            out.append(_render_word(token, next(words), mark))
        else:
            out.append(token.text)
    return "".join(out)
