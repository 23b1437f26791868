"""Exception types raised by the library."""

from __future__ import annotations


class UzSyllableError(Exception):
    """Base class for all library errors."""


class UnknownCharacter(UzSyllableError):
    def __init__(self, word: str, position: int):
        self.word = word
        self.position = position
        super().__init__(f"unknown character {word[position]!r} at position {position} in {word!r}")


class NoVowel(UzSyllableError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"word {word!r} has no vowel")


class AnnotationMismatch(UzSyllableError):
    pass


class ParseError(UzSyllableError):
    """A malformed line in a lexicon or dataset file."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class ConcatMismatch(ParseError):
    pass


class CountMismatch(ParseError):
    pass
