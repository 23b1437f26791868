"""Line-break points derived from a syllable division.

A syllable boundary is a valid break only if at least two letters stay on
each line, so ``a-ba-diy`` can only be broken as ``aba-diy``.  Letters are
counted as graphemes: ``oʻ`` and ``sh`` count once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .syllabifier import SyllabifiedWord

MIN_SIDE = 2


@dataclass(frozen=True)
class HyphenationSet:
    word: str
    valid_breaks: tuple[int, ...]
    variants: tuple[str, ...]


def break_points(division: SyllabifiedWord, min_side: int = MIN_SIDE) -> tuple[int, ...]:
    total = len(division.graphemes)
    return tuple(b for b in division.boundaries if b >= min_side and total - b >= min_side)


def render_variants(word, breaks: Sequence[int], mark: str = "-") -> list[str]:
    """One copy of ``word`` per break, with a single ``mark`` inserted there.

    ``word`` is anything exposing ``graphemes`` (a token or a division).
    """
    texts = [g.text for g in word.graphemes]
    return ["".join(texts[:b]) + mark + "".join(texts[b:]) for b in sorted(breaks)]


def hyphenate(division: SyllabifiedWord, mark: str = "-") -> HyphenationSet:
    breaks = break_points(division)
    return HyphenationSet(division.text, breaks, tuple(render_variants(division, breaks, mark)))
