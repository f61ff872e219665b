"""Golden-corpus parsing and execution for format conformance checks.

A corpus is a UTF-8, LF-terminated text file with one case per line::

    <format> | <tokens> | <expected>

Fields are separated by `` | ``.  Tokens are whitespace-separated typed
values tagged ``i:`` (integer), ``r:`` (real), ``b:`` (boolean),
``s:`` (text, with ``\\s`` space, ``\\n`` newline and ``\\\\`` escapes)
or ``iv:`` (comma-separated integers, which expand to one integer value
per element).  The expected field supports ``\\n`` and ``\\\\`` escapes
so multi-line output fits on one line.  Blank lines and ``#`` comments
are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .editdesc import ParseError, RenderError, SignMode, Value, parse, render


class CorpusSyntaxError(ValueError):
    """A corpus line could not be parsed; carries the line number."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


@dataclass(frozen=True)
class CorpusCase:
    """One conformance check: a format, its values, and the exact output."""

    line_no: int
    format_text: str
    values: tuple[Value, ...]
    expected: str


@dataclass(frozen=True)
class CaseResult:
    case: CorpusCase
    actual: str | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.actual == self.case.expected


def _unescape(text: str, line_no: int, allow_space: bool) -> str:
    out: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        if i + 1 >= len(text):
            raise CorpusSyntaxError(line_no, "dangling backslash")
        tag = text[i + 1]
        if tag == "n":
            out.append("\n")
        elif tag == "\\":
            out.append("\\")
        elif tag == "s" and allow_space:
            out.append(" ")
        else:
            raise CorpusSyntaxError(line_no, f"unknown escape \\{tag}")
        i += 2
    return "".join(out)


def parse_token(token: str, line_no: int) -> list[Value]:
    """Parse one typed token into the value(s) it contributes."""
    tag, sep, payload = token.partition(":")
    if not sep:
        raise CorpusSyntaxError(line_no, f"token {token!r} has no type tag")
    if tag == "i":
        try:
            return [int(payload)]
        except ValueError:
            raise CorpusSyntaxError(line_no, f"bad integer {payload!r}") from None
    if tag == "r":
        try:
            return [float(payload)]
        except ValueError:
            raise CorpusSyntaxError(line_no, f"bad real {payload!r}") from None
    if tag == "b":
        if payload == "true":
            return [True]
        if payload == "false":
            return [False]
        raise CorpusSyntaxError(line_no, f"bad boolean {payload!r}")
    if tag == "s":
        return [_unescape(payload, line_no, allow_space=True)]
    if tag == "iv":
        try:
            return [int(part) for part in payload.split(",")]
        except ValueError:
            raise CorpusSyntaxError(line_no, f"bad integer vector {payload!r}") from None
    raise CorpusSyntaxError(line_no, f"unknown token tag {tag!r}")


def parse_corpus(text: str) -> list[CorpusCase]:
    """Parse corpus text into cases, skipping blanks and comments."""
    cases: list[CorpusCase] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = raw.split(" | ")
        if len(fields) != 3:
            raise CorpusSyntaxError(
                line_no, f"expected 3 ' | '-separated fields, got {len(fields)}"
            )
        format_text, token_field, expected_field = fields
        values: list[Value] = []
        # a lone '-' marks a case whose format consumes no values
        if token_field.strip() != "-":
            for token in token_field.split():
                values.extend(parse_token(token, line_no))
        expected = _unescape(expected_field, line_no, allow_space=False)
        cases.append(CorpusCase(line_no, format_text.strip(), tuple(values), expected))
    return cases


def load_corpus(path: str) -> list[CorpusCase]:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_corpus(handle.read())


def run_case(case: CorpusCase) -> CaseResult:
    """Render one case; parse and render failures become case failures."""
    try:
        fmt = parse(case.format_text)
        actual = render(fmt, case.values, sign=SignMode.SUPPRESS, newline="\n")
    except (ParseError, RenderError) as exc:
        return CaseResult(case, error=str(exc))
    return CaseResult(case, actual=actual)


def run_corpus(cases: list[CorpusCase]) -> list[CaseResult]:
    """Run every case, reporting results in input order."""
    return [run_case(case) for case in cases]


def escape_text(text: str) -> str:
    """Escape a rendered string for one-line display."""
    return text.replace("\\", "\\\\").replace("\n", "\\n").replace("\t", "\\t")
