"""Command-line front end: render, v2s, and conform subcommands.

Exit codes: 0 success, 1 conformance failures, 2 malformed input
(format, corpus, or style), 3 value errors (arity, type, unparseable
token).  Diagnostics go to stderr; payload goes to stdout.
"""

from __future__ import annotations

import argparse
import sys

from .corpus import CorpusSyntaxError, escape_text, load_corpus, run_corpus
from .editdesc import ParseError, RenderError, SignMode, Value, parse, render
from .stringify import (
    UnknownStyleError,
    v2s_bool,
    v2s_int,
    v2s_intvec,
    v2s_real,
)

_TOKEN_TAGS = "i (integer), r (real), b (boolean), s (text), iv (integer vector)"


def _parse_cli_token(token: str) -> list[Value]:
    tag, sep, payload = token.partition(":")
    if not sep:
        raise ValueError(f"token {token!r} has no type tag; tags are {_TOKEN_TAGS}")
    if tag == "i":
        return [int(payload)]
    if tag == "r":
        return [float(payload)]
    if tag == "b":
        if payload == "true":
            return [True]
        if payload == "false":
            return [False]
        raise ValueError(f"boolean token must be true or false, got {payload!r}")
    if tag == "s":
        return [_unescape_arg(payload)]
    if tag == "iv":
        return [int(part) for part in payload.split(",")]
    raise ValueError(f"unknown token tag {tag!r}; tags are {_TOKEN_TAGS}")


def _unescape_arg(text: str) -> str:
    out: list[str] = []
    i = 0
    while i < len(text):
        if text[i] != "\\":
            out.append(text[i])
            i += 1
            continue
        if i + 1 >= len(text):
            raise ValueError("dangling backslash in text token")
        tag = text[i + 1]
        if tag == "n":
            out.append("\n")
        elif tag == "s":
            out.append(" ")
        elif tag == "\\":
            out.append("\\")
        else:
            raise ValueError(f"unknown escape \\{tag} in text token")
        i += 2
    return "".join(out)


def _cmd_render(args: argparse.Namespace) -> int:
    try:
        fmt = parse(args.fmt)
    except ParseError as exc:
        print(f"strfmt render: {exc}", file=sys.stderr)
        return 2
    values: list[Value] = []
    try:
        for token in args.tokens:
            values.extend(_parse_cli_token(token))
    except ValueError as exc:
        print(f"strfmt render: {exc}", file=sys.stderr)
        return 3
    sign = SignMode.PLUS if args.sign == "sp" else SignMode.SUPPRESS
    newline = "\r\n" if args.newline == "crlf" else "\n"
    try:
        out = render(fmt, values, sign=sign, newline=newline)
    except RenderError as exc:
        print(f"strfmt render: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(out + "\n")
    return 0


def _cmd_v2s(args: argparse.Namespace) -> int:
    try:
        if args.type == "int":
            out = v2s_int(int(args.value), args.spec)
        elif args.type == "real":
            out = v2s_real(float(args.value), args.spec)
        elif args.type == "bool":
            if args.value == "true":
                flag = True
            elif args.value == "false":
                flag = False
            else:
                raise ValueError(f"boolean value must be true or false, got {args.value!r}")
            out = v2s_bool(flag, args.bool_style)
        else:  # intvec
            elements = [int(part) for part in args.value.split(",")]
            out = v2s_intvec(elements, args.spec)
    except ParseError as exc:
        print(f"strfmt v2s: {exc}", file=sys.stderr)
        return 2
    except UnknownStyleError as exc:
        print(f"strfmt v2s: {exc}", file=sys.stderr)
        return 2
    except (RenderError, ValueError) as exc:
        print(f"strfmt v2s: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(out + "\n")
    return 0


def _cmd_conform(args: argparse.Namespace) -> int:
    try:
        cases = load_corpus(args.corpus)
    except OSError as exc:
        print(f"strfmt conform: cannot read corpus: {exc}", file=sys.stderr)
        return 2
    except CorpusSyntaxError as exc:
        print(f"strfmt conform: {exc}", file=sys.stderr)
        return 2
    results = run_corpus(cases)
    failed = 0
    for result in results:
        case = result.case
        if result.ok:
            print(f"PASS line {case.line_no}")
        else:
            failed += 1
            actual = result.error if result.actual is None else escape_text(result.actual)
            print(
                f"FAIL line {case.line_no}: "
                f"expected {escape_text(case.expected)!r} got {actual!r}"
            )
    print(f"{len(results)} cases: {len(results) - failed} passed, {failed} failed")
    if args.report_dir is not None:
        from .report import write_report

        table_path, figure_path = write_report(results, args.report_dir)
        print(f"report written to {table_path} and {figure_path}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strfmt",
        description="Render values through format edit descriptors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_render = sub.add_parser("render", help="render typed tokens through a format")
    p_render.add_argument("--fmt", required=True, help="format specification")
    p_render.add_argument("tokens", nargs="*", help=f"typed tokens: {_TOKEN_TAGS}")
    p_render.add_argument(
        "--newline", choices=("lf", "crlf"), default="lf", help="record break style"
    )
    p_render.add_argument(
        "--sign", choices=("sp", "ss"), default="ss", help="initial sign mode"
    )
    p_render.set_defaults(func=_cmd_render)

    p_v2s = sub.add_parser("v2s", help="convert one value to text")
    p_v2s.add_argument(
        "--type", required=True, choices=("int", "real", "bool", "intvec")
    )
    p_v2s.add_argument("--spec", default=None, help="edit descriptor, e.g. I2 or F8.2")
    p_v2s.add_argument(
        "--bool-style",
        default=None,
        help="boolean style: default, word, code or switch",
    )
    p_v2s.add_argument("value", help="the value; intvec as comma-separated integers")
    p_v2s.set_defaults(func=_cmd_v2s)

    p_conform = sub.add_parser("conform", help="run a golden conformance corpus")
    p_conform.add_argument("--corpus", required=True, help="corpus file path")
    p_conform.add_argument(
        "--report-dir",
        default=None,
        help="also write results.tsv and summary.png into this directory",
    )
    p_conform.set_defaults(func=_cmd_conform)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry_point() -> None:
    sys.exit(main())
