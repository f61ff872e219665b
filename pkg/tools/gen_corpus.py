#!/usr/bin/env python3
"""Generate and freeze the golden conformance corpus.

Each case is assembled as (format text, op list, values); the expected
output comes from the reference renderer in tests/refproc.py, never
from the package itself.  The package is consulted only afterwards, as
a sanity gate: a freshly generated corpus must pass 100% before it is
written.  Run from the repository root:

    python3 tools/gen_corpus.py [--out corpus/golden.corpus]
"""

from __future__ import annotations

import argparse
import math
import os
import random
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(ROOT, "tests"))
sys.path.insert(0, os.path.join(ROOT, "src"))

import refproc  # noqa: E402

SEED = 746353
SEPARATOR = " | "


def esc_expected(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\n", "\\n")


def esc_text_token(text: str) -> str:
    return (
        text.replace("\\", "\\\\").replace("\n", "\\n").replace(" ", "\\s")
    )


def token_for(value) -> str:
    if isinstance(value, bool):
        return "b:true" if value else "b:false"
    if isinstance(value, int):
        return f"i:{value}"
    if isinstance(value, float):
        return f"r:{value!r}"
    if isinstance(value, str):
        return "s:" + esc_text_token(value)
    raise TypeError(f"no token form for {value!r}")


class Case:
    """One corpus line under construction."""

    def __init__(self):
        self.fragments: list[str] = []
        self.ops: list[tuple] = []
        self.values: list = []

    def lit(self, text: str) -> "Case":
        self.fragments.append("'" + text.replace("'", "''") + "'")
        self.ops.append(("lit", text))
        return self

    def brk(self) -> "Case":
        self.fragments.append("/")
        self.ops.append(("brk",))
        return self

    def sign(self, plus: bool) -> "Case":
        self.fragments.append("SP" if plus else "SS")
        self.ops.append(("sgn", "+" if plus else "-"))
        return self

    def intf(self, value: int, width: int, repeat: int = 1) -> "Case":
        text = f"I{width}"
        self.fragments.append(text if repeat == 1 else f"{repeat}{text}")
        for _ in range(repeat):
            self.ops.append(("int", width))
            self.values.append(value)
        return self

    def intf_each(self, values: list[int], width: int) -> "Case":
        self.fragments.append(f"{len(values)}(I{width})")
        for v in values:
            self.ops.append(("int", width))
            self.values.append(v)
        return self

    def fixf(self, value: float, width: int, decimals: int) -> "Case":
        self.fragments.append(f"F{width}.{decimals}")
        self.ops.append(("fix", width, decimals))
        self.values.append(value)
        return self

    def expf(
        self, value: float, width: int, decimals: int, expdigits: int | None = None
    ) -> "Case":
        suffix = "" if expdigits is None else f"E{expdigits}"
        self.fragments.append(f"E{width}.{decimals}{suffix}")
        self.ops.append(("exp", width, decimals, expdigits))
        self.values.append(value)
        return self

    def charf(self, value: str, width: int | None) -> "Case":
        self.fragments.append("A" if width is None else f"A{width}")
        self.ops.append(("chr", width))
        self.values.append(value)
        return self

    def lglf(self, value: bool, width: int) -> "Case":
        self.fragments.append(f"L{width}")
        self.ops.append(("lgl", width))
        self.values.append(value)
        return self

    def group(self, repeat: int, body: "Case") -> "Case":
        inner = ",".join(body.fragments)
        self.fragments.append(f"{repeat}({inner})")
        for _ in range(repeat):
            self.ops.extend(body.ops)
            self.values.extend(body.values)
        return self

    def line(self) -> str:
        fmt = "(" + ",".join(self.fragments) + ")"
        expected = refproc.run_ops(self.ops, self.values)
        tokens = " ".join(token_for(v) for v in self.values) if self.values else "-"
        field3 = esc_expected(expected)
        for field in (fmt, tokens, field3):
            if SEPARATOR in field:
                raise ValueError(f"field contains separator: {field!r}")
        return SEPARATOR.join((fmt, tokens, field3))


def literal_only_line(text: str, quote: str = "'") -> str:
    doubled = text.replace(quote, quote * 2)
    fmt = f"({quote}{doubled}{quote})"
    return SEPARATOR.join((fmt, "-", esc_expected(text)))


def intvec_line(values: list[int], width: int) -> str:
    """A grouped integer run supplied through one iv: token."""
    case = Case()
    case.intf_each(values, width)
    fmt = "(" + ",".join(case.fragments) + ")"
    expected = refproc.run_ops(case.ops, case.values)
    token = "iv:" + ",".join(str(v) for v in values)
    return SEPARATOR.join((fmt, token, esc_expected(expected)))


def interesting_floats(rng: random.Random) -> list[float]:
    fixed = [
        0.0,
        -0.0,
        1.0,
        -1.0,
        0.5,
        -0.5,
        0.125,
        12.345,
        2.675,
        2.5,
        3.7,
        0.099999,
        99.95,
        -0.001,
        5e-324,
        1.7976931348623157e308,
        -9.87654321e-7,
        6.02214076e23,
    ]
    draws = [
        rng.uniform(-1.0, 1.0),
        rng.uniform(-1e6, 1e6),
        rng.uniform(-1e-3, 1e-3),
        math.ldexp(rng.random() - 0.5, rng.randrange(-60, 60)),
        (-1.0) ** rng.randrange(2) * 10.0 ** rng.uniform(-30, 30) * rng.random(),
        float(rng.randrange(-10**9, 10**9)),
        round(rng.uniform(-500, 500), rng.randrange(1, 7)),
    ]
    return fixed + draws


def gen_int_cases(rng: random.Random, out: list[str]):
    specials = [0, 1, -1, 7, -42, 999, -999, 123456789, -123456789012]
    for v in specials:
        w = rng.randrange(0, 14)
        out.append(Case().intf(v, w).line())
    for _ in range(30):
        v = rng.randrange(-10**10, 10**10)
        w = rng.randrange(0, 14)
        case = Case()
        if rng.random() < 0.3:
            case.sign(True)
        case.intf(v, w)
        out.append(case.line())
    # exact-fit and one-short boundaries
    for v in (12345, -12345):
        body = len(str(abs(v))) + (1 if v < 0 else 0)
        for w in (body, body - 1, body + 2):
            out.append(Case().intf(v, w).line())


def gen_fixed_cases(rng: random.Random, out: list[str]):
    for v in interesting_floats(rng):
        if not math.isfinite(v) or abs(v) > 1e30:
            w, d = rng.randrange(0, 16), rng.randrange(0, 4)
        else:
            w, d = rng.randrange(0, 16), rng.randrange(0, 9)
        case = Case()
        if rng.random() < 0.3:
            case.sign(True)
        case.fixf(v, w, d)
        out.append(case.line())
    for _ in range(28):
        v = rng.choice(interesting_floats(rng))
        if abs(v) > 1e30:
            continue
        case = Case()
        if rng.random() < 0.5:
            case.sign(rng.random() < 0.7)
        case.fixf(v, rng.randrange(0, 16), rng.randrange(0, 9))
        out.append(case.line())
    # leading-zero drop and hard overflow pins
    out.append(Case().sign(True).fixf(0.5, 3, 1).line())
    out.append(Case().fixf(-0.25, 4, 2).line())
    out.append(Case().fixf(0.75, 3, 2).line())
    out.append(Case().fixf(123.456, 5, 3).line())
    out.append(Case().fixf(4.0, 2, 0).line())
    out.append(Case().fixf(math.nan, 6, 2).line())
    out.append(Case().fixf(math.inf, 6, 2).line())
    out.append(Case().sign(True).fixf(math.inf, 6, 2).line())
    out.append(Case().fixf(-math.inf, 2, 2).line())


def gen_exp_cases(rng: random.Random, out: list[str]):
    for v in interesting_floats(rng):
        w = rng.randrange(1, 20)
        d = rng.randrange(0, 9)
        e = rng.choice([None, None, 1, 2, 3, 4])
        case = Case()
        if rng.random() < 0.3:
            case.sign(True)
        case.expf(v, w, d, e)
        out.append(case.line())
    for _ in range(20):
        v = rng.choice(interesting_floats(rng))
        case = Case()
        if rng.random() < 0.4:
            case.sign(rng.random() < 0.6)
        case.expf(v, rng.randrange(1, 20), rng.randrange(0, 9), rng.choice([None, 1, 2, 3]))
        out.append(case.line())
    # exponent-capacity boundaries
    out.append(Case().expf(1e300, 14, 4, 2).line())
    out.append(Case().expf(1e99, 12, 3, 2).line())
    out.append(Case().expf(1.5e-9, 13, 4, 1).line())
    out.append(Case().expf(0.99999, 10, 3).line())
    out.append(Case().expf(5e-324, 14, 4, 3).line())
    out.append(Case().expf(0.0, 12, 4, 3).line())
    out.append(Case().expf(-0.0, 12, 4, 3).line())


def gen_logical_cases(rng: random.Random, out: list[str]):
    for flag in (True, False):
        for w in (1, 2, 5, 7):
            out.append(Case().lglf(flag, w).line())


def gen_char_cases(rng: random.Random, out: list[str]):
    samples = ["x", "hello", "padded", "truncate-me", "", "no=pe?!", "a'b"]
    for s in samples:
        out.append(Case().charf(s, None).line())
        w = rng.randrange(1, 12)
        out.append(Case().charf(s, w).line())


def gen_literal_cases(out: list[str]):
    out.append(literal_only_line("plain words"))
    out.append(literal_only_line("commas, inside, literal"))
    out.append(literal_only_line("it's doubled"))
    out.append(SEPARATOR.join(('("double quoted")', "-", "double quoted")))
    out.append(SEPARATOR.join(("('embedded \"quote\"')", "-", 'embedded "quote"')))
    out.append(SEPARATOR.join(("('o''clock')", "-", "o'clock")))
    out.append(SEPARATOR.join(('("say ""hi""")', "-", 'say "hi"')))
    out.append(Case().lit("x=").intf(3, 0).lit(";").line())


def gen_break_cases(rng: random.Random, out: list[str]):
    out.append(Case().charf("first", None).brk().charf("second", None).line())
    out.append(Case().brk().charf("after-leading-break", None).line())
    out.append(Case().charf("before-trailing-break", None).brk().line())
    out.append(Case().brk().brk().charf("two-breaks", None).line())
    out.append(Case().intf(1, 3).brk().intf(2, 3).brk().intf(3, 3).line())
    out.append(Case().lit("head").brk().lit("tail").line())
    out.append(Case().fixf(1.5, 6, 2).brk().fixf(-1.5, 6, 2).line())
    out.append(Case().lglf(True, 2).brk().lglf(False, 2).line())


def gen_group_cases(rng: random.Random, out: list[str]):
    out.append(Case().intf(5, 3, repeat=3).line())
    out.append(intvec_line([1, 2, 3, 4], 3))
    out.append(intvec_line([-7, 0, 7], 4))
    body = Case().charf("ab", None).intf(9, 3)
    out.append(Case().group(2, body).line())
    inner = Case().intf(1, 1)
    nested = Case()
    nested.fragments.append("2(2(I1))")
    for _ in range(4):
        nested.ops.append(("int", 1))
        nested.values.append(1)
    out.append(nested.line())
    body2 = Case().lit("<").fixf(0.5, 5, 2).lit(">")
    out.append(Case().group(3, body2).line())
    body3 = Case().sign(True).intf(4, 4)
    out.append(Case().group(2, body3).intf(4, 4).line())
    out.append(Case().charf("r", None).group(2, Case().brk().intf(8, 2)).line())


def gen_sign_cases(rng: random.Random, out: list[str]):
    out.append(Case().sign(True).intf(5, 4).sign(False).intf(5, 4).line())
    out.append(Case().sign(True).fixf(2.5, 7, 2).fixf(2.5, 7, 2).line())
    out.append(Case().sign(True).expf(2.5, 12, 3).sign(False).expf(2.5, 12, 3).line())
    out.append(Case().intf(3, 3).sign(True).intf(3, 3).line())
    out.append(Case().sign(False).intf(-2, 3).sign(True).intf(-2, 3).line())
    out.append(Case().sign(True).lit("|").lglf(True, 1).lit("|").intf(1, 2).line())


def gen_mixed_cases(rng: random.Random, out: list[str]):
    out.append(
        Case().lit("(").intf(2, 0).lit(",").intf(3, 0).lit(") = ").fixf(12.345, 0, 3).line()
    )
    out.append(
        Case()
        .charf("1st line of message ...", None)
        .brk()
        .charf("... and 2nd line", None)
        .line()
    )
    # repeated group where each pass consumes different values
    garbled = Case()
    garbled.fragments.append("3(A,SP,F3.1)")
    for text, number in (("(", 0.5), (", ", 1.0), (", ", -2.0)):
        garbled.ops.extend([("chr", None), ("sgn", "+"), ("fix", 3, 1)])
        garbled.values.extend([text, number])
    garbled.charf(")", None)
    out.append(garbled.line())
    out.append(Case().lit("resnorm = ").expf(0.0123, 12, 4, 3).line())
    out.append(Case().lit("iter ").intf(7, 0).lit(" of ").intf(100, 0).line())
    for _ in range(10):
        case = Case()
        pieces = rng.randrange(2, 5)
        for _ in range(pieces):
            kind = rng.randrange(5)
            if kind == 0:
                case.lit(rng.choice(["a", "b=", ", ", ": ", "ok"]))
            elif kind == 1:
                case.intf(rng.randrange(-999, 999), rng.randrange(0, 7))
            elif kind == 2:
                case.fixf(rng.choice(interesting_floats(rng)), rng.randrange(0, 12), rng.randrange(0, 5))
            elif kind == 3:
                case.lglf(rng.random() < 0.5, rng.randrange(1, 4))
            else:
                case.charf(rng.choice(["s", "tt", "uuu"]), rng.choice([None, 2, 4]))
        out.append(case.line())


def build_lines() -> list[str]:
    rng = random.Random(SEED)
    cases: list[str] = []
    gen_int_cases(rng, cases)
    gen_fixed_cases(rng, cases)
    gen_exp_cases(rng, cases)
    gen_logical_cases(rng, cases)
    gen_char_cases(rng, cases)
    gen_literal_cases(cases)
    gen_break_cases(rng, cases)
    gen_group_cases(rng, cases)
    gen_sign_cases(rng, cases)
    gen_mixed_cases(rng, cases)
    return cases


HEADER = """\
# Golden conformance corpus for the strfmt renderer.
# One case per line: <format> | <tokens> | <expected>
# Tokens: i:<int> r:<real> b:true|false s:<text, \\s space> iv:<ints,comma>
# A '-' token field means the format consumes no values.
# Expected field escapes: \\n newline, \\\\ backslash.
# Frozen output of the reference field renderer; do not edit by hand.
"""


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=os.path.join(ROOT, "corpus", "golden.corpus"))
    args = parser.parse_args()

    lines = build_lines()

    # sanity gate: the package must agree before the corpus is frozen
    from strfmt.corpus import parse_corpus, run_corpus

    text = HEADER + "\n" + "\n".join(lines) + "\n"
    results = run_corpus(parse_corpus(text))
    bad = [r for r in results if not r.ok]
    for r in bad[:10]:
        print(
            f"DISAGREE line {r.case.line_no}: {r.case.format_text!r} "
            f"expected {r.case.expected!r} got {(r.error or r.actual)!r}",
            file=sys.stderr,
        )
    if bad:
        print(f"{len(bad)} disagreement(s); corpus NOT written", file=sys.stderr)
        return 1

    os.makedirs(os.path.dirname(args.out), exist_ok=True)
    with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    print(f"{len(lines)} cases written to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
