"""Rule-based syllabification and hyphenation for Uzbek (Latin and Cyrillic)."""

__version__ = "0.1.0"

from .alphabet import Grapheme, GraphemeClass, Script, classify, detect_script, normalize_text, segment_graphemes
from .errors import (
    AnnotationMismatch,
    ConcatMismatch,
    CountMismatch,
    NoVowel,
    ParseError,
    UnknownCharacter,
    UzSyllableError,
)
from .hyphenator import HyphenationSet, break_points, hyphenate, render_variants
from .lexicon import ExceptionLexicon, bundled_lexicon, load_lexicon
from .syllabifier import (
    Source,
    SyllabifiedWord,
    count_syllables,
    divide,
    syllabify,
    syllabify_text,
    syllabify_word,
)
from .tokenizer import Reason, Token, TokenKind, detokenize, tokenize

__all__ = [
    "AnnotationMismatch", "ConcatMismatch", "CountMismatch", "ExceptionLexicon", "Grapheme",
    "GraphemeClass", "HyphenationSet", "NoVowel", "ParseError", "Reason", "Script", "Source",
    "SyllabifiedWord", "Token", "TokenKind", "UnknownCharacter", "UzSyllableError",
    "break_points", "bundled_lexicon", "classify", "count_syllables", "detect_script",
    "detokenize", "divide", "hyphenate", "load_lexicon", "normalize_text", "render_variants",
    "segment_graphemes", "syllabify", "syllabify_text", "syllabify_word", "tokenize",
]
