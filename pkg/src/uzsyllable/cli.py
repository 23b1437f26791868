"""Command-line front end.

    uzsyllable <command> [--script latin|cyrillic|auto] [--format plain|json]
               [--lexicon PATH] [--input PATH] [--output PATH]
               [--ascii-apostrophe] [--port N]

Every input line is processed independently.  Exit status is 0 on success,
1 on a usage error and 2 when input, lexicon or dataset cannot be read.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import IO, Iterator, Optional, Sequence

from .alphabet import to_ascii_apostrophe
from .errors import ParseError
from .evaluation import evaluate, load_dataset
from .lexicon import ExceptionLexicon, load_lexicon
from .schemas import analyze, dump

COMMANDS = ("syllabify", "hyphenate", "count", "evaluate", "serve")

EXIT_OK, EXIT_USAGE, EXIT_IO = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="uzsyllable", description="Uzbek syllabification and hyphenation.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--script", choices=("latin", "cyrillic", "auto"), default="auto")
    parser.add_argument("--format", choices=("plain", "json"), default="plain")
    parser.add_argument("--lexicon", metavar="PATH", help="exception lexicon (word<TAB>syl-la-bles)")
    parser.add_argument("--input", metavar="PATH", help="read from PATH instead of stdin")
    parser.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")
    parser.add_argument("--ascii-apostrophe", action="store_true",
                        help="render ʻ and ʼ as a plain apostrophe")
    parser.add_argument("--port", type=int, default=8080, help="port for serve (default 8080)")
    parser.add_argument("--host", default="127.0.0.1", help="bind address for serve")
    parser.add_argument("--dataset", metavar="PATH", help="gold TSV for evaluate (default: --input)")
    parser.add_argument("--strict", action="store_true", help="evaluate: abort on the first bad row")
    return parser


def _plain_line(command: str, line: str, script: str, lexicon, ascii_apostrophe: bool) -> str:
    doc = analyze(line, script, lexicon, ascii_apostrophe)
    if command == "syllabify":
        return doc.rendered
    if command == "hyphenate":
        return "".join(";".join(t.hyphenations) or t.text if t.kind == "word" else t.text
                       for t in doc.tokens)
    return "\t".join(f"{t.text} {t.count}" for t in doc.tokens if t.kind == "word")


def process_lines(command: str, lines: Iterator[str], fmt: str = "plain", script: str = "auto",
                  lexicon: Optional[ExceptionLexicon] = None,
                  ascii_apostrophe: bool = False) -> Iterator[str]:
    for line in lines:
        line = line.rstrip("\r\n")
        if fmt == "json":
            doc = dump(analyze(line, script, lexicon, ascii_apostrophe))
            yield json.dumps(doc, ensure_ascii=False)
        else:
            yield _plain_line(command, line, script, lexicon, ascii_apostrophe)


def _evaluate(args, lexicon, stdin: IO[str], out: IO[str]) -> None:
    source = args.dataset or args.input
    records = load_dataset(source or stdin, strict=args.strict)
    report = evaluate(records, lexicon)
    if args.format == "json":
        text = json.dumps(report.to_dict(), ensure_ascii=False, indent=2)
    else:
        text = report.format_text()
    if args.ascii_apostrophe:
        text = to_ascii_apostrophe(text)
    out.write(text + "\n")


def _serve(args, lexicon) -> None:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(lexicon), host=args.host, port=args.port)


def run(argv: Optional[Sequence[str]] = None, stdin: Optional[IO[str]] = None,
        stdout: Optional[IO[str]] = None, stderr: Optional[IO[str]] = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(parser.format_usage())
        stderr.write(f"uzsyllable: error: {exc}\n")
        return EXIT_USAGE

    try:
        lexicon = load_lexicon(args.lexicon) if args.lexicon else None
    except (OSError, ParseError) as exc:
        stderr.write(f"uzsyllable: cannot load lexicon: {exc}\n")
        return EXIT_IO

    if args.command == "serve":
        _serve(args, lexicon)
        return EXIT_OK

    try:
        with contextlib.ExitStack() as stack:
            src = stdin
            if args.input and args.command != "evaluate":
                src = stack.enter_context(open(args.input, encoding="utf-8"))
            out = stack.enter_context(open(args.output, "w", encoding="utf-8")) if args.output else stdout
            if args.command == "evaluate":
                _evaluate(args, lexicon, stdin, out)
                return EXIT_OK
            for line in process_lines(args.command, src, args.format, args.script, lexicon,
                                      args.ascii_apostrophe):
                out.write(line + "\n")
    except (OSError, UnicodeDecodeError, ParseError) as exc:
        stderr.write(f"uzsyllable: {exc}\n")
        return EXIT_IO
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
