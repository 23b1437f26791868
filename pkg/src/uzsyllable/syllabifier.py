"""Vowel-centred syllable division.

Every vowel is a nucleus.  Between two nuclei, only the last consonant of
the run starts the next syllable; the rest close the previous one.  Signs
(tutuq, ъ, ь) never start a syllable and always stay with what precedes
them.

>>> syllabify_text("ona bola").rendered
'o-na bo-la'
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Sequence, Union

from .alphabet import Grapheme, Script, normalize_text, segment_graphemes
from .errors import NoVowel
from .lexicon import ExceptionLexicon
from .tokenizer import Token, detokenize, tokenize


class Source(str, Enum):
    RULE = "rule"
    LEXICON = "lexicon"


@dataclass(frozen=True)
class SyllabifiedWord:
    syllables: tuple[tuple[Grapheme, ...], ...]
    source: Source = Source.RULE

    @property
    def graphemes(self) -> tuple[Grapheme, ...]:
        return tuple(g for syl in self.syllables for g in syl)

    @property
    def texts(self) -> list[str]:
        return ["".join(g.text for g in syl) for syl in self.syllables]

    @property
    def boundaries(self) -> list[int]:
        """Grapheme indices at which a new syllable starts (excluding 0)."""
        out, pos = [], 0
        for syl in self.syllables[:-1]:
            pos += len(syl)
            out.append(pos)
        return out

    @property
    def text(self) -> str:
        return "".join(self.texts)

    def __len__(self) -> int:
        return len(self.syllables)

    def render(self, mark: str = "-") -> str:
        return mark.join(self.texts)


def _split(graphemes: Sequence[Grapheme], boundaries: Sequence[int]) -> tuple[tuple[Grapheme, ...], ...]:
    cuts = [0, *boundaries, len(graphemes)]
    return tuple(tuple(graphemes[a:b]) for a, b in zip(cuts, cuts[1:]))


def rule_boundaries(graphemes: Sequence[Grapheme]) -> list[int]:
    nuclei = [i for i, g in enumerate(graphemes) if g.is_vowel]
    if not nuclei:
        raise NoVowel("".join(g.text for g in graphemes))
    boundaries = []
    for left, right in zip(nuclei, nuclei[1:]):
        consonants = [i for i in range(left + 1, right) if not graphemes[i].is_sign]
        # hiatus: signs between the vowels stay on the left
        boundaries.append(consonants[-1] if consonants else right)
    return boundaries


def divide(graphemes: Sequence[Grapheme]) -> SyllabifiedWord:
    """Divide a grapheme sequence into syllables by rule.

    Raises :class:`NoVowel` when there is no nucleus.
    """
    graphemes = tuple(graphemes)
    return SyllabifiedWord(_split(graphemes, rule_boundaries(graphemes)), Source.RULE)


def _from_lexicon(token: Token, syllables: tuple) -> SyllabifiedWord | None:
    # offsets taken from the lowercase entry, applied to the original casing
    if sum(len(s) for s in syllables) != len(token.text):
        return None
    pieces, pos = [], 0
    for syl in syllables:
        pieces.append(token.text[pos:pos + len(syl)])
        pos += len(syl)
    script = token.script or token.graphemes[0].script
    return SyllabifiedWord(tuple(tuple(segment_graphemes(p, script)) for p in pieces), Source.LEXICON)


def syllabify(token: Token, lexicon: Optional[ExceptionLexicon] = None) -> SyllabifiedWord:
    """Divide a word token, preferring an exact lexicon entry over the rules."""
    if lexicon:
        syllables = lexicon.get(token.text.lower())
        if syllables is not None:
            found = _from_lexicon(token, syllables)
            if found is not None:
                return found
    return divide(token.graphemes)


def count_syllables(token: Token, lexicon: Optional[ExceptionLexicon] = None) -> int:
    return len(syllabify(token, lexicon))


@dataclass(frozen=True)
class TextAnalysis:
    """Tokens of a text with the division of each word token.

    ``divisions[i]`` is None for non-word tokens.  Word tokens carry the
    graphemes of their division, which differ from the rule segmentation
    only when a lexicon entry cuts through a digraph.
    """

    tokens: tuple[Token, ...]
    divisions: tuple[Optional[SyllabifiedWord], ...]
    rendered: str

    def words(self):
        return [(t, d) for t, d in zip(self.tokens, self.divisions) if d is not None]


def resolve_script(script: Union[Script, str, None]) -> Optional[Script]:
    if script is None or script == "auto":
        return None
    return Script(script)


def syllabify_text(
    text: str,
    script: Union[Script, str, None] = "auto",
    lexicon: Optional[ExceptionLexicon] = None,
    mark: str = "-",
    ng_digraph: bool = False,
) -> TextAnalysis:
    """Normalize, tokenize, divide every word and render the result.

    Per-word failures never raise; such words are passed through unchanged.
    """
    normalized = normalize_text(text)
    tokens = []
    divisions = []
    for token in tokenize(normalized, resolve_script(script), ng_digraph):
        if token.is_word:
            division = syllabify(token, lexicon)
            token = replace(token, graphemes=division.graphemes)
            divisions.append(division)
        else:
            divisions.append(None)
        tokens.append(token)
    annotations = [d.boundaries for d in divisions if d is not None]
    rendered = detokenize(tokens, annotations, mark) if annotations else normalized
    return TextAnalysis(tuple(tokens), tuple(divisions), rendered)


def syllabify_word(word: str, script: Union[Script, str, None] = "auto",
                   lexicon: Optional[ExceptionLexicon] = None) -> Optional[SyllabifiedWord]:
    """Divide a single word; None when it is not syllabifiable."""
    analysis = syllabify_text(word, script, lexicon)
    words = analysis.words()
    if len(analysis.tokens) != 1 or len(words) != 1:
        return None
    return words[0][1]
