"""Pydantic models shared by the HTTP API and the CLI ``--format json`` output."""

from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from .alphabet import to_ascii_apostrophe
from .hyphenator import hyphenate
from .lexicon import ExceptionLexicon
from .syllabifier import syllabify_text


class ApiRequest(BaseModel):
    text: str
    script: Literal["latin", "cyrillic", "auto"] = "auto"
    lexicon: bool = True


class TokenOut(BaseModel):
    text: str
    kind: Literal["word", "passthrough", "separator"]
    reason: Optional[str] = None
    syllables: Optional[List[str]] = None
    hyphenations: Optional[List[str]] = None
    count: Optional[int] = None
    source: Optional[Literal["rule", "lexicon"]] = None


class ApiResponse(BaseModel):
    tokens: List[TokenOut] = Field(default_factory=list)
    rendered: str = ""


class Health(BaseModel):
    status: str
    version: str
    lexicon_entries: int


def analyze(text: str, script: str = "auto", lexicon: Optional[ExceptionLexicon] = None,
            ascii_apostrophe: bool = False) -> ApiResponse:
    """Full analysis of ``text``: the one serialization both front ends emit."""
    analysis = syllabify_text(text, script, lexicon)
    fix = to_ascii_apostrophe if ascii_apostrophe else (lambda s: s)
    tokens = []
    for token, division in zip(analysis.tokens, analysis.divisions):
        if division is None:
            tokens.append(TokenOut(text=fix(token.text), kind=token.kind.value,
                                   reason=token.reason.value if token.reason else None))
            continue
        tokens.append(TokenOut(
            text=fix(token.text),
            kind=token.kind.value,
            syllables=[fix(s) for s in division.texts],
            hyphenations=[fix(v) for v in hyphenate(division).variants],
            count=len(division),
            source=division.source.value,
        ))
    return ApiResponse(tokens=tokens, rendered=fix(analysis.rendered))


def dump(response: BaseModel) -> dict:
    return response.model_dump(mode="json", exclude_none=True)
