"""Exit criteria of the package, one test (group) per criterion.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section of the terminal summary for one PASS/FAIL line per criterion.
"""

import io
import json
import random
import time

import pytest
from fastapi.testclient import TestClient

from uzsyllable.alphabet import Script, normalize_text, segment_graphemes
from uzsyllable.cli import run
from uzsyllable.errors import ConcatMismatch
from uzsyllable.evaluation import EvalRecord, evaluate, generate_gold, load_dataset, parse_record
from uzsyllable.hyphenator import hyphenate
from uzsyllable.service import create_app
from uzsyllable.syllabifier import divide, syllabify_text, syllabify_word
from uzsyllable.tokenizer import detokenize, tokenize

from oracles import oracle_divide, random_graphemes

APOSTROPHES = "'`´‘’ʻʼ"

# Cyrillic words with divisions computed by oracles.oracle_divide, frozen here.
CYRILLIC_ORACLE = {
    "она": "о-на", "бола": "бо-ла", "китоб": "ки-тоб", "мактаб": "мак-таб", "ўзбек": "ўз-бек",
    "дарахт": "да-рахт", "қишлоқ": "қиш-лоқ", "ғалаба": "ға-ла-ба", "ҳаво": "ҳа-во",
    "апрель": "ап-рель", "подъезд": "по-дъезд", "юлдуз": "юл-дуз", "ёмғир": "ём-ғир",
    "тарвуз": "тар-вуз", "шаҳар": "ша-ҳар", "мустақил": "мус-та-қил", "эълон": "эъ-лон",
    "мўъжиза": "мўъ-жи-за", "оила": "о-и-ла", "ташаккур": "та-шак-кур",
}


def check_division(graphemes, division):
    """Structural invariants; returns the list of violations."""
    bad = []
    if division.graphemes != tuple(graphemes):
        bad.append("concatenation")
    for i, syl in enumerate(division.syllables):
        if sum(g.is_vowel for g in syl) != 1:
            bad.append(f"syllable {i} vowel count")
        if i and syl[0].is_sign:
            bad.append(f"syllable {i} starts with a sign")
        onset = []
        for g in syl:
            if g.is_vowel:
                break
            onset.append(g)
        if i and sum(not g.is_sign for g in onset) > 1:
            bad.append(f"syllable {i} onset")
    n = len(division.graphemes)
    for b in hyphenate(division).valid_breaks:
        if b < 2 or n - b < 2:
            bad.append(f"hyphen side at {b}")
    return bad


@pytest.mark.acceptance("1", "Table I golden suite (11 Latin rows)")
def test_table1_golden(data_dir):
    start = time.perf_counter()
    records = load_dataset(data_dir / "table1_latin.tsv", strict=True)
    assert len(records) == 11
    for rec in records:
        division = syllabify_word(rec.word)
        assert tuple(division.texts) == rec.gold_syllables, rec.word
        assert set(hyphenate(division).variants) == rec.gold_hyphenations, rec.word
        assert len(division) == rec.gold_count, rec.word
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance("1", "Table I golden suite (11 Latin rows)")
def test_table1_printed_typo_is_rejected():
    with pytest.raises(ConcatMismatch):
        parse_record("qadoqlatish\tqa-diq-la-tish\tqa-doqlatish;qadoq-latish;qadoqla-tish\t4")
    # the hyphenation cell, as printed, is consistent with the corrected row
    rec = parse_record("qadoqlatish\tqa-doq-la-tish\tqa-doqlatish;qadoq-latish;qadoqla-tish\t4")
    assert set(hyphenate(syllabify_word("qadoqlatish")).variants) == rec.gold_hyphenations


@pytest.mark.acceptance("2", "Table III regression suite (18 loanwords)")
def test_table3_regression(loanword_rows, loanwords):
    start = time.perf_counter()
    assert len(loanword_rows) == 18
    for word, correct, predicted in loanword_rows:
        assert syllabify_text(word).rendered == predicted
        assert syllabify_text(word, lexicon=loanwords).rendered == correct
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance("3", "ona / bola examples")
def test_intro_examples():
    assert syllabify_text("ona").rendered == "o-na"
    assert syllabify_text("bola").rendered == "bo-la"
    assert hyphenate(syllabify_word("ona")).variants == ()
    assert set(hyphenate(syllabify_word("bola")).variants) == {"bo-la"}


@pytest.mark.acceptance("4a", "divide() equals brute-force oracle, 10,000 words per script")
@pytest.mark.parametrize("script", list(Script))
def test_oracle_equivalence(script):
    rng = random.Random(f"acceptance-{script.value}")
    mismatches = []
    for _ in range(10_000):
        graphemes = random_graphemes(rng, script)
        if divide(graphemes).texts != oracle_divide(graphemes):
            mismatches.append("".join(g.text for g in graphemes))
    assert mismatches == []


@pytest.mark.acceptance("4b", "syllable and hyphenation invariants over the same corpus")
@pytest.mark.parametrize("script", list(Script))
def test_invariant_suite(script):
    rng = random.Random(f"acceptance-{script.value}")
    violations = []
    for _ in range(10_000):
        graphemes = random_graphemes(rng, script)
        bad = check_division(graphemes, divide(graphemes))
        if bad:
            violations.append(("".join(g.text for g in graphemes), bad))
    assert violations == []


def noisy_string(rng):
    pool = list("abdefghijklmnopqrstuvxyzOGSHC") + list("аеёиоуўэюяқғҳъь") + list(" .,-!?0123")
    chars = [rng.choice(APOSTROPHES) if rng.random() < 0.25 else rng.choice(pool)
             for _ in range(rng.randint(0, 40))]
    return "".join(chars)


@pytest.mark.acceptance("4c", "normalization idempotence and tokenize round-trip on noisy text")
def test_noisy_round_trip():
    rng = random.Random("noisy")
    seen = set()
    for _ in range(1000):
        raw = noisy_string(rng)
        seen |= set(raw) & set(APOSTROPHES)
        once = normalize_text(raw)
        assert normalize_text(once) == once, raw
        assert detokenize(tokenize(once), [], "-") == once, raw
    assert seen == set(APOSTROPHES)


@pytest.mark.acceptance("5", "evaluation harness self-checks")
def test_evaluation_self_checks():
    words = ["abadiy", "kitob", "maktab", "qishloq", "ona", "bola", "dahshatli", "keksaygan",
             "arabcha", "adovatli"]
    gold = generate_gold(words)
    report = evaluate(gold)
    for value in (report.word_accuracy, report.boundary_precision, report.boundary_recall,
                  report.boundary_f1, report.count_accuracy, report.count_micro_f1,
                  report.hyphenation_exact_match):
        assert value == 1.0
    corrupted = list(gold)
    for i in (1, 6):
        r = corrupted[i]
        syl = list(r.gold_syllables)
        syl[0], syl[1] = syl[0] + syl[1][0], syl[1][1:]
        corrupted[i] = EvalRecord(r.word, tuple(syl), r.gold_hyphenations, r.gold_count, r.script)
    report = evaluate(corrupted)
    assert report.word_accuracy == 0.8
    assert report.count_micro_f1 == report.count_accuracy


def fuzz_inputs(n=50):
    rng = random.Random("parity")
    vocab = ["abadiy", "Oʻzbekiston", "o'g'il", "ma’no", "AQSH", "2024", "она", "апрель", "abstrakt",
             "brr", "café", "onaона", "kichkintoy", "€", "—", "(", ")", "bo`la", "SH", "g‘isht"]
    seps = [" ", ", ", "-", "! ", " — ", "\t"]
    out = []
    for _ in range(n):
        parts = []
        for _ in range(rng.randint(0, 8)):
            word = rng.choice(vocab)
            if rng.random() < 0.3:
                word = "".join(rng.choice([c, c.upper()]) for c in word)
            parts.append(word + rng.choice(seps))
        out.append("".join(parts))
    return out


@pytest.mark.acceptance("6", "API/CLI parity on 50 fuzzed inputs")
def test_api_cli_parity(loanwords, tmp_path):
    lex = tmp_path / "lexicon.tsv"
    lex.write_text("\n".join(f"{w}\t{'-'.join(s)}" for w, s in loanwords.items()), encoding="utf-8")
    client = TestClient(create_app(loanwords))
    inputs = fuzz_inputs()
    stdout = io.StringIO()
    code = run(["syllabify", "--format", "json", "--lexicon", str(lex)],
               stdin=io.StringIO("\n".join(inputs) + "\n"), stdout=stdout, stderr=io.StringIO())
    assert code == 0
    cli_docs = [json.loads(line) for line in stdout.getvalue().splitlines()]
    assert len(cli_docs) == 50
    for text, cli_doc in zip(inputs, cli_docs):
        api_doc = client.post("/api/syllabify", json={"text": text}).json()
        assert api_doc == cli_doc, text


@pytest.mark.acceptance("7", "Cyrillic coverage")
def test_cyrillic():
    assert syllabify_text("она").rendered == "о-на"
    assert len(CYRILLIC_ORACLE) == 20
    for word, expected in CYRILLIC_ORACLE.items():
        graphemes = segment_graphemes(word, Script.CYRILLIC)
        division = divide(graphemes)
        assert division.render() == expected
        assert "-".join(oracle_divide(graphemes)) == expected
        assert check_division(graphemes, division) == []
    assert syllabify_text("апрель").rendered == "ап-рель"
    assert syllabify_word("подъезд").texts == ["по", "дъезд"]
