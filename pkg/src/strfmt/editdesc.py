"""Fortran-style format edit descriptors: parsing and rendering.

A format specification is either a full parenthesized list, e.g.
``"('(',I0,',',I0,') = ',F0.3)"``, or a bare descriptor such as ``"F8.2"``
(which is treated as the contents of a one-item list).  The supported
descriptor set is I, F, E (with optional exponent-width suffix), A, L,
the sign controls SP/SS, quoted literals, ``/`` record breaks, and
repeat counts on data descriptors and parenthesized groups.

Rendering follows the classic fixed-field conventions: right
justification inside an explicit field width, a fill of asterisks when
the field is too narrow, optional suppression of the leading zero of
fixed-point values when that is the only way to fit, and round-half-even
digit rounding of the exact binary value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from enum import Enum
from typing import Iterator, Sequence, Union


class SignMode(Enum):
    """Whether non-negative numbers carry an explicit plus sign."""

    PLUS = "SP"
    SUPPRESS = "SS"
    PROCESSOR_DEFAULT = "S"  # rendered identically to SUPPRESS


class ParseError(ValueError):
    """A format specification could not be parsed.

    Carries the zero-based ``position`` of the offending character in
    the original specification text.
    """

    def __init__(self, reason: str, position: int):
        super().__init__(f"{reason} (at position {position})")
        self.reason = reason
        self.position = position


class RenderError(ValueError):
    """A format and its value list do not agree (arity or type)."""


@dataclass(frozen=True)
class IntDesc:
    """``Iw`` integer field; width 0 means minimal width."""

    width: int

    def __post_init__(self):
        if self.width < 0:
            raise ValueError("integer field width must be non-negative")


@dataclass(frozen=True)
class FixedDesc:
    """``Fw.d`` fixed-point field; width 0 means minimal width."""

    width: int
    decimals: int

    def __post_init__(self):
        if self.width < 0:
            raise ValueError("fixed field width must be non-negative")
        if self.decimals < 0:
            raise ValueError("fixed field decimals must be non-negative")


@dataclass(frozen=True)
class ExpDesc:
    """``Ew.d`` or ``Ew.dEe`` scientific field; ``exp_digits`` defaults to 2."""

    width: int
    decimals: int
    exp_digits: int | None = None

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("exponential field width must be positive")
        if self.decimals < 0:
            raise ValueError("exponential field decimals must be non-negative")
        if self.exp_digits is not None and self.exp_digits < 1:
            raise ValueError("exponent digit count must be positive")


@dataclass(frozen=True)
class CharDesc:
    """``A`` or ``Aw`` character field."""

    width: int | None = None

    def __post_init__(self):
        if self.width is not None and self.width < 1:
            raise ValueError("character field width must be positive")


@dataclass(frozen=True)
class LogicalDesc:
    """``Lw`` logical field rendered as T or F."""

    width: int

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("logical field width must be positive")


@dataclass(frozen=True)
class SignControl:
    """``SP``/``SS`` state change for subsequent numeric fields."""

    mode: SignMode


@dataclass(frozen=True)
class Literal:
    """Quoted text emitted verbatim."""

    text: str


@dataclass(frozen=True)
class RecordBreak:
    """``/`` descriptor: ends the current line."""


@dataclass(frozen=True)
class Group:
    """A repeated descriptor or parenthesized sub-list."""

    repeat: int
    items: tuple["EditDescriptor", ...]

    def __post_init__(self):
        if self.repeat < 1:
            raise ValueError("group repeat count must be positive")
        if not self.items:
            raise ValueError("group must contain at least one descriptor")


EditDescriptor = Union[
    IntDesc,
    FixedDesc,
    ExpDesc,
    CharDesc,
    LogicalDesc,
    SignControl,
    Literal,
    RecordBreak,
    Group,
]

Value = Union[int, float, bool, str]

_DATA_DESCRIPTORS = (IntDesc, FixedDesc, ExpDesc, CharDesc, LogicalDesc)


@dataclass(frozen=True)
class FormatList:
    """Parsed format specification: an ordered tuple of descriptors."""

    items: tuple[EditDescriptor, ...]


# ---------------------------------------------------------------------------
# parsing


class _Parser:
    """Single-pass recursive-descent parser over a format string."""

    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.pos = 0
        # subtracted from reported positions when a bare descriptor was
        # wrapped in parentheses before parsing
        self.offset = offset

    def fail(self, reason: str, position: int | None = None):
        pos = self.pos if position is None else position
        raise ParseError(reason, max(pos - self.offset, 0))

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        return ch

    def skip_blanks(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def parse_format(self) -> FormatList:
        self.skip_blanks()
        if self.peek() != "(":
            self.fail("format must start with '('")
        self.take()
        items = self.parse_items()
        if self.peek() != ")":
            self.fail("unbalanced parentheses: missing ')'")
        self.take()
        self.skip_blanks()
        if self.peek() is not None:
            self.fail("trailing text after closing ')'")
        return FormatList(tuple(items))

    def parse_items(self) -> list[EditDescriptor]:
        items: list[EditDescriptor] = []
        self.skip_blanks()
        if self.peek() == ")":
            return items
        while True:
            items.append(self.parse_item())
            self.skip_blanks()
            ch = self.peek()
            if ch == ",":
                self.take()
                self.skip_blanks()
            elif ch == ")" or ch is None:
                return items
            elif ch == "/" or isinstance(items[-1], RecordBreak):
                # record breaks need no comma on either side
                continue
            else:
                self.fail("expected ',', '/' or ')'")

    def parse_item(self) -> EditDescriptor:
        self.skip_blanks()
        ch = self.peek()
        if ch is None:
            self.fail("unbalanced parentheses: missing ')'")
        if ch == "/":
            self.take()
            return RecordBreak()
        if ch in "'\"":
            return self.parse_literal()
        if ch == "(":
            return self.parse_group(repeat=1)
        if ch.isdigit():
            count_pos = self.pos
            repeat = self.parse_count()
            self.skip_blanks()
            if repeat == 0:
                self.fail("zero repeat count", count_pos)
            if self.peek() == "(":
                return self.parse_group(repeat)
            item = self.parse_descriptor()
            if not isinstance(item, _DATA_DESCRIPTORS):
                self.fail("repeat count must precede a data descriptor or group", count_pos)
            return Group(repeat, (item,))
        if ch.isalpha():
            return self.parse_descriptor()
        self.fail(f"unexpected character {ch!r}")

    def parse_group(self, repeat: int) -> Group:
        open_pos = self.pos
        self.take()  # '('
        items = self.parse_items()
        if self.peek() != ")":
            self.fail("unbalanced parentheses: missing ')'")
        self.take()
        if not items:
            self.fail("empty group", open_pos)
        return Group(repeat, tuple(items))

    def parse_literal(self) -> Literal:
        quote_pos = self.pos
        quote = self.take()
        chars: list[str] = []
        while True:
            ch = self.peek()
            if ch is None:
                self.fail("unterminated literal", quote_pos)
            self.take()
            if ch == quote:
                if self.peek() == quote:  # doubled quote escapes itself
                    self.take()
                    chars.append(quote)
                    continue
                return Literal("".join(chars))
            chars.append(ch)

    def parse_count(self) -> int:
        digits = []
        while (ch := self.peek()) is not None and ch.isdigit():
            digits.append(self.take())
        return int("".join(digits))

    def parse_width(self, what: str) -> int:
        self.skip_blanks()
        ch = self.peek()
        if ch is None or not ch.isdigit():
            self.fail(f"missing width on {what}")
        return self.parse_count()

    def parse_descriptor(self) -> EditDescriptor:
        start = self.pos
        letter = self.take().upper()
        if letter == "S":
            nxt = self.peek()
            if nxt is not None and nxt.upper() == "P":
                self.take()
                return SignControl(SignMode.PLUS)
            if nxt is not None and nxt.upper() == "S":
                self.take()
                return SignControl(SignMode.SUPPRESS)
            self.fail("unknown descriptor 'S'", start)
        if letter == "I":
            return IntDesc(self.parse_width("I"))
        if letter == "F":
            width = self.parse_width("F")
            decimals = self.parse_decimals("F")
            return FixedDesc(width, decimals)
        if letter == "E":
            width = self.parse_width("E")
            if width == 0:
                self.fail("E descriptor width must be positive", start)
            decimals = self.parse_decimals("E")
            exp_digits = None
            nxt = self.peek()
            if nxt is not None and nxt.upper() == "E":
                marker_pos = self.pos
                self.take()
                ch = self.peek()
                if ch is None or not ch.isdigit():
                    self.fail("expected exponent digits after 'E'", marker_pos)
                exp_digits = self.parse_count()
                if exp_digits == 0:
                    self.fail("exponent digit count must be positive", marker_pos)
            return ExpDesc(width, decimals, exp_digits)
        if letter == "A":
            ch = self.peek()
            if ch is not None and ch.isdigit():
                width_pos = self.pos
                width = self.parse_count()
                if width == 0:
                    self.fail("A descriptor width must be positive", width_pos)
                return CharDesc(width)
            return CharDesc(None)
        if letter == "L":
            width_pos = self.pos
            width = self.parse_width("L")
            if width == 0:
                self.fail("L descriptor width must be positive", width_pos)
            return LogicalDesc(width)
        self.fail(f"unknown descriptor letter {letter!r}", start)

    def parse_decimals(self, what: str) -> int:
        self.skip_blanks()
        if self.peek() != ".":
            self.fail(f"missing decimals on {what}")
        self.take()
        self.skip_blanks()
        ch = self.peek()
        if ch is None or not ch.isdigit():
            self.fail(f"missing decimals on {what}")
        return self.parse_count()


def parse(spec_text: str) -> FormatList:
    """Parse a format specification into a :class:`FormatList`.

    Accepts a full parenthesized format, or a bare descriptor which is
    wrapped into a one-item list.  Raises :class:`ParseError` with the
    offending position on malformed input.
    """
    if not spec_text or not spec_text.strip():
        raise ParseError("empty format specification", 0)
    if spec_text.lstrip()[0] == "(":
        return _Parser(spec_text).parse_format()
    return _Parser("(" + spec_text + ")", offset=1).parse_format()


# ---------------------------------------------------------------------------
# serialization


def to_text(fmt: FormatList) -> str:
    """Serialize a format to its canonical parenthesized text form."""
    return "(" + ",".join(_item_text(item) for item in fmt.items) + ")"


def _item_text(item: EditDescriptor) -> str:
    if isinstance(item, IntDesc):
        return f"I{item.width}"
    if isinstance(item, FixedDesc):
        return f"F{item.width}.{item.decimals}"
    if isinstance(item, ExpDesc):
        suffix = "" if item.exp_digits is None else f"E{item.exp_digits}"
        return f"E{item.width}.{item.decimals}{suffix}"
    if isinstance(item, CharDesc):
        return "A" if item.width is None else f"A{item.width}"
    if isinstance(item, LogicalDesc):
        return f"L{item.width}"
    if isinstance(item, SignControl):
        # processor-default sign state serializes as its SS equivalent
        return "SP" if item.mode is SignMode.PLUS else "SS"
    if isinstance(item, Literal):
        return "'" + item.text.replace("'", "''") + "'"
    if isinstance(item, RecordBreak):
        return "/"
    if isinstance(item, Group):
        return f"{item.repeat}(" + ",".join(_item_text(i) for i in item.items) + ")"
    raise TypeError(f"not an edit descriptor: {item!r}")


# ---------------------------------------------------------------------------
# rendering


def _expand(items: Sequence[EditDescriptor]) -> Iterator[EditDescriptor]:
    for item in items:
        if isinstance(item, Group):
            for _ in range(item.repeat):
                yield from _expand(item.items)
        else:
            yield item


def render(
    fmt: FormatList,
    values: Sequence[Value],
    sign: SignMode = SignMode.PROCESSOR_DEFAULT,
    newline: str = "\n",
) -> str:
    """Render ``values`` through ``fmt`` into a single string.

    ``sign`` is the initial sign state; SP/SS descriptors inside the
    format change it for the remainder of the call.  Record breaks emit
    ``newline``.  The value list must match the data descriptors of the
    expanded format exactly, both in count and in type.
    """
    expanded = list(_expand(fmt.items))
    demand = sum(isinstance(item, _DATA_DESCRIPTORS) for item in expanded)
    if demand != len(values):
        raise RenderError(
            f"format consumes {demand} value(s) but {len(values)} were supplied"
        )
    out: list[str] = []
    state = sign
    index = 0
    for item in expanded:
        if isinstance(item, Literal):
            out.append(item.text)
        elif isinstance(item, RecordBreak):
            out.append(newline)
        elif isinstance(item, SignControl):
            state = item.mode
        else:
            out.append(_render_value(values[index], item, state))
            index += 1
    return "".join(out)


def _render_value(value: Value, desc: EditDescriptor, sign: SignMode) -> str:
    if isinstance(desc, IntDesc):
        if isinstance(value, bool) or not isinstance(value, int):
            raise RenderError(
                f"integer descriptor {_item_text(desc)} cannot render {value!r}"
            )
        return render_int(value, desc, sign)
    if isinstance(desc, (FixedDesc, ExpDesc)):
        if not isinstance(value, float):
            raise RenderError(
                f"real descriptor {_item_text(desc)} cannot render {value!r}"
            )
        if isinstance(desc, FixedDesc):
            return render_fixed(value, desc, sign)
        return render_exp(value, desc, sign)
    if isinstance(desc, CharDesc):
        if not isinstance(value, str):
            raise RenderError(
                f"character descriptor {_item_text(desc)} cannot render {value!r}"
            )
        return render_char(value, desc)
    if isinstance(desc, LogicalDesc):
        if not isinstance(value, bool):
            raise RenderError(
                f"logical descriptor {_item_text(desc)} cannot render {value!r}"
            )
        return render_logical(value, desc)
    raise TypeError(f"not a data descriptor: {desc!r}")


def _fit(body: str, width: int) -> str:
    if width == 0:
        return body
    if len(body) > width:
        return "*" * width
    return body.rjust(width)


def _sign_char(negative: bool, sign: SignMode) -> str:
    if negative:
        return "-"
    return "+" if sign is SignMode.PLUS else ""


def render_int(value: int, desc: IntDesc, sign: SignMode = SignMode.SUPPRESS) -> str:
    """Render an integer field; minimal width when ``desc.width`` is 0."""
    body = _sign_char(value < 0, sign) + str(abs(value))
    return _fit(body, desc.width)


def _render_nonfinite(value: float, width: int, sign: SignMode) -> str:
    if math.isnan(value):
        body = "NaN"
    else:
        body = _sign_char(value < 0, sign) + "Inf"
    return _fit(body, width)


def render_fixed(value: float, desc: FixedDesc, sign: SignMode = SignMode.SUPPRESS) -> str:
    """Render a fixed-point field rounded half-even to ``desc.decimals``.

    The leading zero of values below one is dropped when that is the
    only way to fit the explicit width; a field that still does not fit
    is filled with asterisks.
    """
    if not math.isfinite(value):
        return _render_nonfinite(value, desc.width, sign)
    digits = format(value, f".{desc.decimals}f")
    negative = digits.startswith("-")
    if negative:
        digits = digits[1:]
    if desc.decimals == 0:
        digits += "."
    body = _sign_char(negative, sign) + digits
    if desc.width > 0 and len(body) > desc.width and digits.startswith("0."):
        body = _sign_char(negative, sign) + digits[1:]
    return _fit(body, desc.width)


def render_exp(value: float, desc: ExpDesc, sign: SignMode = SignMode.SUPPRESS) -> str:
    """Render a scientific field with the significand scaled into [0.1, 1)."""
    if not math.isfinite(value):
        return _render_nonfinite(value, desc.width, sign)
    exp_digits = 2 if desc.exp_digits is None else desc.exp_digits
    negative, mantissa, exponent = _exp_parts(value, desc.decimals)
    if len(str(abs(exponent))) > exp_digits:
        return "*" * desc.width
    body = (
        _sign_char(negative, sign)
        + "0."
        + mantissa
        + "E"
        + ("-" if exponent < 0 else "+")
        + str(abs(exponent)).zfill(exp_digits)
    )
    return _fit(body, desc.width)


def _exp_parts(value: float, decimals: int) -> tuple[bool, str, int]:
    """Split a finite float into (negative, mantissa digits, power of ten)."""
    if value == 0.0:
        return math.copysign(1.0, value) < 0, "0" * decimals, 0
    if decimals == 0:
        # no mantissa digits survive; round in exact decimal arithmetic
        with localcontext() as ctx:
            ctx.prec = 1200
            magnitude = Decimal(value).copy_abs()
            exponent = magnitude.adjusted() + 1
            rounded = magnitude.scaleb(-exponent).quantize(
                Decimal(1), rounding=ROUND_HALF_EVEN
            )
        if rounded == 1:
            exponent += 1
        return value < 0, "", exponent
    text = format(abs(value), f".{decimals - 1}e")
    mantissa, _, exponent = text.partition("e")
    return value < 0, mantissa.replace(".", ""), int(exponent) + 1


def render_logical(value: bool, desc: LogicalDesc) -> str:
    """Render ``T`` or ``F`` right-justified in the field."""
    return ("T" if value else "F").rjust(desc.width)


def render_char(value: str, desc: CharDesc) -> str:
    """Render a character field: pad on the left, or keep the leftmost
    ``width`` characters when the value is longer than the field."""
    if desc.width is None:
        return value
    if len(value) > desc.width:
        return value[: desc.width]
    return value.rjust(desc.width)
