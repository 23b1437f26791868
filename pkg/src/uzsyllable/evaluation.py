"""Scoring the engine against gold syllabification datasets.

Dataset rows are tab separated::

    word<TAB>syl-la-bles<TAB>variant-one;variant-two<TAB>count

The hyphenation column may be empty; ``#`` starts a comment line.
"""

from __future__ import annotations

import logging
import os
from dataclasses import asdict, dataclass, field
from typing import IO, Iterable, Optional, Sequence, Union

from .alphabet import MIXED, Script, detect_script, normalize_text
from .errors import ConcatMismatch, CountMismatch, ParseError
from .hyphenator import hyphenate
from .lexicon import ExceptionLexicon
from .syllabifier import syllabify_word

log = logging.getLogger(__name__)

PathOrStream = Union[str, "os.PathLike[str]", IO[str]]


@dataclass(frozen=True)
class EvalRecord:
    word: str
    gold_syllables: tuple[str, ...]
    gold_hyphenations: frozenset = frozenset()
    gold_count: int = 0
    script: Script = Script.LATIN

    @property
    def gold_boundaries(self) -> frozenset:
        return _offsets(self.gold_syllables)

    def to_line(self) -> str:
        variants = ";".join(sorted(self.gold_hyphenations, key=lambda v: v.index("-")))
        return f"{self.word}\t{'-'.join(self.gold_syllables)}\t{variants}\t{self.gold_count}"


def _offsets(syllables: Sequence[str]) -> frozenset:
    """Codepoint offsets of the internal syllable boundaries."""
    out, pos = set(), 0
    for syl in syllables[:-1]:
        pos += len(syl)
        out.add(pos)
    return frozenset(out)


def parse_record(line: str, lineno: int = 0) -> EvalRecord:
    fields = line.split("\t")
    if len(fields) != 4:
        raise ParseError(lineno, f"expected 4 tab-separated columns, got {len(fields)}")
    word, division, variants, count = (normalize_text(f.strip()) for f in fields)
    if not word or not division:
        raise ParseError(lineno, "empty word or syllable column")
    syllables = tuple(division.split("-"))
    if not all(syllables):
        raise ParseError(lineno, f"empty syllable in {division!r}")
    if "".join(syllables) != word:
        raise ConcatMismatch(lineno, f"{division!r} does not spell {word!r}")
    try:
        gold_count = int(count)
    except ValueError:
        raise ParseError(lineno, f"count {count!r} is not an integer") from None
    if gold_count != len(syllables):
        raise CountMismatch(lineno, f"count {gold_count} but {len(syllables)} syllables")
    hyphenations = frozenset(v.strip() for v in variants.split(";") if v.strip())
    for variant in hyphenations:
        if variant.count("-") != 1 or variant.replace("-", "") != word:
            raise ConcatMismatch(lineno, f"hyphenation {variant!r} does not match {word!r}")
    script = detect_script(word)
    if script == MIXED:
        raise ParseError(lineno, f"{word!r} mixes scripts")
    return EvalRecord(word, syllables, hyphenations, gold_count, script)


def load_dataset(source: PathOrStream, strict: bool = False,
                 errors: Optional[list] = None) -> list[EvalRecord]:
    """Read gold records, skipping (or, with ``strict``, raising on) bad lines.

    Skipped lines are logged and, when ``errors`` is given, appended to it
    as :class:`ParseError` instances.
    """
    own = isinstance(source, (str, os.PathLike))
    stream = open(source, encoding="utf-8") if own else source
    records = []
    try:
        for lineno, line in enumerate(stream, 1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                records.append(parse_record(line, lineno))
            except ParseError as exc:
                if strict:
                    raise
                log.warning("skipping %s", exc)
                if errors is not None:
                    errors.append(exc)
    finally:
        if own:
            stream.close()
    return records


@dataclass
class EvalReport:
    n_records: int = 0
    word_accuracy: float = 0.0
    boundary_precision: float = 0.0
    boundary_recall: float = 0.0
    boundary_f1: float = 0.0
    count_accuracy: float = 0.0
    count_micro_f1: float = 0.0
    hyphenation_exact_match: float = 0.0
    error_listing: list = field(default_factory=list)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["error_listing"] = [
            {"word": w, "gold": g, "predicted": p} for w, g, p in self.error_listing
        ]
        return out

    def format_text(self) -> str:
        lines = [
            f"records                  {self.n_records}",
            f"word accuracy            {self.word_accuracy:.4f}",
            f"boundary precision       {self.boundary_precision:.4f}",
            f"boundary recall          {self.boundary_recall:.4f}",
            f"boundary F1              {self.boundary_f1:.4f}",
            f"count accuracy           {self.count_accuracy:.4f}",
            f"count micro-F1           {self.count_micro_f1:.4f}",
            f"hyphenation exact match  {self.hyphenation_exact_match:.4f}",
        ]
        if self.error_listing:
            lines.append("")
            lines.append("word\tgold\tpredicted")
            lines.extend("\t".join(row) for row in self.error_listing)
        return "\n".join(lines)


@dataclass(frozen=True)
class _Prediction:
    syllables: tuple[str, ...]
    count: int
    hyphenations: frozenset


def _predict(record: EvalRecord, lexicon: Optional[ExceptionLexicon]) -> _Prediction:
    division = syllabify_word(record.word, record.script, lexicon)
    if division is None:
        return _Prediction((record.word,), 0, frozenset())
    return _Prediction(tuple(division.texts), len(division), frozenset(hyphenate(division).variants))


def _ratio(num: int, den: int, empty: float) -> float:
    return num / den if den else empty


def _f1(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if p + r else 0.0


def micro_f1(gold: Sequence, predicted: Sequence) -> float:
    """Micro-averaged F1 over single-label predictions.

    Pools per-label true positives, false positives and false negatives; for
    one label per instance this coincides with accuracy.
    """
    labels = set(gold) | set(predicted)
    tp = fp = fn = 0
    for label in labels:
        for g, p in zip(gold, predicted):
            if p == label and g == label:
                tp += 1
            elif p == label:
                fp += 1
            elif g == label:
                fn += 1
    return _f1(_ratio(tp, tp + fp, 0.0), _ratio(tp, tp + fn, 0.0))


def evaluate(records: Iterable[EvalRecord], lexicon: Optional[ExceptionLexicon] = None) -> EvalReport:
    records = list(records)
    if not records:
        return EvalReport()
    predictions = [_predict(r, lexicon) for r in records]

    exact = tp = fp = fn = count_ok = hyph_ok = 0
    errors = []
    for record, pred in zip(records, predictions):
        if pred.syllables == record.gold_syllables:
            exact += 1
        else:
            errors.append((record.word, "-".join(record.gold_syllables), "-".join(pred.syllables)))
        gold_b = record.gold_boundaries
        pred_b = _offsets(pred.syllables)
        tp += len(gold_b & pred_b)
        fp += len(pred_b - gold_b)
        fn += len(gold_b - pred_b)
        count_ok += pred.count == record.gold_count
        hyph_ok += pred.hyphenations == record.gold_hyphenations

    n = len(records)
    # with no boundaries anywhere, an empty prediction is perfect
    precision = _ratio(tp, tp + fp, 1.0 if fn == 0 else 0.0)
    recall = _ratio(tp, tp + fn, 1.0 if fp == 0 else 0.0)
    return EvalReport(
        n_records=n,
        word_accuracy=exact / n,
        boundary_precision=precision,
        boundary_recall=recall,
        boundary_f1=_f1(precision, recall),
        count_accuracy=count_ok / n,
        count_micro_f1=micro_f1([r.gold_count for r in records], [p.count for p in predictions]),
        hyphenation_exact_match=hyph_ok / n,
        error_listing=errors,
    )


def diff_report(records: Iterable[EvalRecord], lexicon: Optional[ExceptionLexicon] = None) -> list:
    """``(word, gold, predicted)`` rows for every record the engine gets wrong."""
    out = []
    for record in records:
        pred = _predict(record, lexicon)
        if pred.syllables != record.gold_syllables:
            out.append((record.word, "-".join(record.gold_syllables), "-".join(pred.syllables)))
    return out


def generate_gold(words: Iterable[str], lexicon: Optional[ExceptionLexicon] = None,
                  script: Union[Script, str, None] = "auto") -> list[EvalRecord]:
    """Records holding the engine's own output; unsyllabifiable words are dropped."""
    records = []
    for word in words:
        division = syllabify_word(word, script, lexicon)
        if division is None:
            continue
        variants = frozenset(hyphenate(division).variants)
        records.append(EvalRecord(division.text, tuple(division.texts), variants,
                                  len(division), division.graphemes[0].script))
    return records


def write_dataset(records: Iterable[EvalRecord], stream: IO[str]) -> None:
    for record in records:
        stream.write(record.to_line() + "\n")
