"""Random format generators shared by property and agreement tests.

Two flavors are provided.  :func:`random_ast` builds descriptor trees
out of the package's own AST classes, for roundtrip and expansion
properties.  :func:`random_case` assembles a format string, an op list
for the reference renderer, and a value list entirely on its own, so
oracle-agreement tests exercise the package's parser and renderer
end to end without trusting either.
"""

from __future__ import annotations

import math
import random

from strfmt import (
    CharDesc,
    ExpDesc,
    FixedDesc,
    Group,
    IntDesc,
    Literal,
    LogicalDesc,
    RecordBreak,
    SignControl,
    SignMode,
)

LITERAL_ALPHABET = "abcXYZ 0189.,:=+-*!?'\""

FLOAT_ANCHORS = [
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
    0.099999,
    99.95,
    -0.001,
    5e-324,
    1.7976931348623157e308,
    math.inf,
    -math.inf,
    math.nan,
]


def rand_int(rng: random.Random) -> int:
    if rng.random() < 0.2:
        return rng.choice([0, 1, -1, 9, -9, 10, -10, 2**31 - 1, -(2**63)])
    return rng.randrange(-(10 ** rng.randrange(1, 13)), 10 ** rng.randrange(1, 13))


def rand_float(rng: random.Random, finite_only: bool = False) -> float:
    roll = rng.randrange(7)
    if roll == 0:
        v = rng.choice(FLOAT_ANCHORS)
        if finite_only and not math.isfinite(v):
            return 0.0
        return v
    if roll == 1:
        return rng.uniform(-1.0, 1.0)
    if roll == 2:
        return rng.uniform(-1e6, 1e6)
    if roll == 3:
        return rng.uniform(-1e-3, 1e-3)
    if roll == 4:
        return float(rng.randrange(-10**9, 10**9))
    if roll == 5:
        return round(rng.uniform(-1000, 1000), rng.randrange(1, 7))
    return math.ldexp(rng.random() - 0.5, rng.randrange(-1074, 1024))


def rand_text(rng: random.Random, max_len: int = 10) -> str:
    n = rng.randrange(0, max_len)
    return "".join(rng.choice("abcdefgh XYZ.,:!?") for _ in range(n))


def rand_literal_text(rng: random.Random) -> str:
    n = rng.randrange(1, 8)
    return "".join(rng.choice(LITERAL_ALPHABET) for _ in range(n))


# ---------------------------------------------------------------------------
# AST flavor


def random_descriptor(rng: random.Random):
    roll = rng.randrange(9)
    if roll == 0:
        return IntDesc(rng.randrange(0, 15))
    if roll == 1:
        return FixedDesc(rng.randrange(0, 15), rng.randrange(0, 9))
    if roll == 2:
        return ExpDesc(
            rng.randrange(1, 20), rng.randrange(0, 9), rng.choice([None, 1, 2, 3, 4])
        )
    if roll == 3:
        return CharDesc(rng.choice([None, rng.randrange(1, 12)]))
    if roll == 4:
        return LogicalDesc(rng.randrange(1, 6))
    if roll == 5:
        return SignControl(rng.choice([SignMode.PLUS, SignMode.SUPPRESS]))
    if roll == 6:
        return Literal(rand_literal_text(rng))
    if roll == 7:
        return RecordBreak()
    return Group(
        rng.randrange(1, 4),
        tuple(random_descriptor_no_group(rng) for _ in range(rng.randrange(1, 4))),
    )


def random_descriptor_no_group(rng: random.Random):
    while True:
        item = random_descriptor(rng)
        if not isinstance(item, Group):
            return item


def random_ast(rng: random.Random, max_items: int = 6) -> tuple:
    return tuple(random_descriptor(rng) for _ in range(rng.randrange(0, max_items + 1)))


def value_for(desc, rng: random.Random):
    if isinstance(desc, IntDesc):
        return rand_int(rng)
    if isinstance(desc, FixedDesc) or isinstance(desc, ExpDesc):
        return rand_float(rng)
    if isinstance(desc, CharDesc):
        return rand_text(rng)
    if isinstance(desc, LogicalDesc):
        return rng.random() < 0.5
    return None


def values_for_ast(items, rng: random.Random) -> list:
    values = []
    for item in items:
        if isinstance(item, Group):
            for _ in range(item.repeat):
                values.extend(values_for_ast(item.items, rng))
        else:
            v = value_for(item, rng)
            if v is not None:
                values.append(v)
    return values


# ---------------------------------------------------------------------------
# textual flavor (no package involvement)


def random_case(rng: random.Random, max_items: int = 5):
    """Build (format text, op list, values) with independent assembly."""
    fragments: list[str] = []
    ops: list[tuple] = []
    values: list = []

    def emit_simple():
        roll = rng.randrange(8)
        if roll == 0:
            w = rng.randrange(0, 15)
            fragments.append(f"I{w}")
            ops.append(("int", w))
            values.append(rand_int(rng))
        elif roll == 1:
            w, d = rng.randrange(0, 15), rng.randrange(0, 9)
            fragments.append(f"F{w}.{d}")
            ops.append(("fix", w, d))
            values.append(rand_float(rng))
        elif roll == 2:
            w, d = rng.randrange(1, 20), rng.randrange(0, 9)
            e = rng.choice([None, 1, 2, 3, 4])
            fragments.append(f"E{w}.{d}" + ("" if e is None else f"E{e}"))
            ops.append(("exp", w, d, e))
            values.append(rand_float(rng))
        elif roll == 3:
            w = rng.choice([None, rng.randrange(1, 12)])
            fragments.append("A" if w is None else f"A{w}")
            ops.append(("chr", w))
            values.append(rand_text(rng))
        elif roll == 4:
            w = rng.randrange(1, 6)
            fragments.append(f"L{w}")
            ops.append(("lgl", w))
            values.append(rng.random() < 0.5)
        elif roll == 5:
            plus = rng.random() < 0.5
            fragments.append("SP" if plus else "SS")
            ops.append(("sgn", "+" if plus else "-"))
        elif roll == 6:
            text = rand_literal_text(rng)
            quote = rng.choice("'\"")
            fragments.append(quote + text.replace(quote, quote * 2) + quote)
            ops.append(("lit", text))
        else:
            fragments.append("/")
            ops.append(("brk",))

    def emit_group():
        repeat = rng.randrange(1, 4)
        inner_fragments: list[str] = []
        count = rng.randrange(1, 4)
        # group bodies render differently per pass only through values,
        # so ops repeat while fresh values are drawn for each pass
        templates = []
        for _ in range(count):
            roll = rng.randrange(4)
            if roll == 0:
                w = rng.randrange(0, 8)
                inner_fragments.append(f"I{w}")
                templates.append(("int", w))
            elif roll == 1:
                w, d = rng.randrange(0, 10), rng.randrange(0, 5)
                inner_fragments.append(f"F{w}.{d}")
                templates.append(("fix", w, d))
            elif roll == 2:
                text = rand_literal_text(rng)
                inner_fragments.append("'" + text.replace("'", "''") + "'")
                templates.append(("lit", text))
            else:
                plus = rng.random() < 0.5
                inner_fragments.append("SP" if plus else "SS")
                templates.append(("sgn", "+" if plus else "-"))
        fragments.append(f"{repeat}(" + ",".join(inner_fragments) + ")")
        for _ in range(repeat):
            for op in templates:
                ops.append(op)
                if op[0] == "int":
                    values.append(rand_int(rng))
                elif op[0] == "fix":
                    values.append(rand_float(rng))

    for _ in range(rng.randrange(1, max_items + 1)):
        if rng.random() < 0.15:
            emit_group()
        else:
            emit_simple()
    return "(" + ",".join(fragments) + ")", ops, values
