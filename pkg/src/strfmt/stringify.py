"""Value-to-string conversion with per-type default formats.

This layer turns single values into clean text: integers and reals via
edit descriptors (defaulting to minimal-width forms), booleans via a
small set of named styles, integer vectors as one ``| value |`` line per
element, and arbitrary user types through the :class:`Stringifiable`
protocol.  Results carry no leading or trailing blanks unless a caller
explicitly asks for width-faithful output with ``trim=False``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Protocol, Sequence, Union, runtime_checkable

from .editdesc import (
    EditDescriptor,
    ExpDesc,
    FixedDesc,
    FormatList,
    IntDesc,
    RenderError,
    SignMode,
    parse,
    render,
    render_exp,
    render_fixed,
    render_int,
)

NEWLINE = "\n"
CRLF = "\r\n"


class UnknownStyleError(ValueError):
    """A boolean style name did not match any known style."""


class BoolStyle(Enum):
    """Named true/false token pairs for boolean conversion."""

    DEFAULT = ("T", "F")
    WORD = ("true", "false")
    CODE = (".true.", ".false.")
    SWITCH = ("on", "off")

    @property
    def true_token(self) -> str:
        return self.value[0]

    @property
    def false_token(self) -> str:
        return self.value[1]

    @classmethod
    def from_name(cls, name: str) -> "BoolStyle":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise UnknownStyleError(f"unknown boolean style {name!r}") from None


@runtime_checkable
class Stringifiable(Protocol):
    """Anything that can describe itself as text."""

    def to_text(self) -> str: ...


@dataclass(frozen=True)
class DefaultRules:
    """Per-type conversion defaults used when no explicit spec is given."""

    int_spec: IntDesc = field(default_factory=lambda: IntDesc(0))
    real_spec: FixedDesc | ExpDesc = field(default_factory=lambda: FixedDesc(0, 6))
    bool_style: BoolStyle = BoolStyle.DEFAULT
    newline: str = NEWLINE

    def __post_init__(self):
        if not isinstance(self.int_spec, IntDesc):
            raise TypeError("int_spec must be an integer descriptor")
        if not isinstance(self.real_spec, (FixedDesc, ExpDesc)):
            raise TypeError("real_spec must be a fixed or exponential descriptor")
        if not isinstance(self.bool_style, BoolStyle):
            raise TypeError("bool_style must be a BoolStyle")
        if self.newline not in (NEWLINE, CRLF):
            raise ValueError("newline must be LF or CRLF")


DEFAULT_RULES = DefaultRules()

SpecLike = Union[str, EditDescriptor, None]


def _resolve_spec(
    spec: SpecLike,
    default: EditDescriptor,
    allowed: tuple[type, ...],
    kind: str,
) -> EditDescriptor:
    if spec is None:
        return default
    if isinstance(spec, str):
        fmt = parse(spec)
        if len(fmt.items) != 1:
            raise RenderError(f"{kind} spec must contain exactly one descriptor: {spec!r}")
        spec = fmt.items[0]
    if not isinstance(spec, allowed):
        raise RenderError(f"descriptor {spec!r} cannot convert a {kind} value")
    return spec


def v2s_int(
    value: int,
    spec: SpecLike = None,
    rules: DefaultRules = DEFAULT_RULES,
    *,
    sign: SignMode = SignMode.SUPPRESS,
    trim: bool = True,
) -> str:
    """Convert an integer; minimal width by default, blank-free when trimmed."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise RenderError(f"not an integer: {value!r}")
    desc = _resolve_spec(spec, rules.int_spec, (IntDesc,), "integer")
    text = render_int(value, desc, sign)
    return text.strip() if trim else text


def v2s_real(
    value: float,
    spec: SpecLike = None,
    rules: DefaultRules = DEFAULT_RULES,
    *,
    sign: SignMode = SignMode.SUPPRESS,
    trim: bool = True,
) -> str:
    """Convert a real; fixed six decimals by default, blank-free when trimmed."""
    if not isinstance(value, float):
        raise RenderError(f"not a real: {value!r}")
    desc = _resolve_spec(spec, rules.real_spec, (FixedDesc, ExpDesc), "real")
    if isinstance(desc, FixedDesc):
        text = render_fixed(value, desc, sign)
    else:
        text = render_exp(value, desc, sign)
    return text.strip() if trim else text


def v2s_bool(
    value: bool,
    style: BoolStyle | str | None = None,
    rules: DefaultRules = DEFAULT_RULES,
) -> str:
    """Convert a boolean using a named style (default, word, code, switch)."""
    if not isinstance(value, bool):
        raise RenderError(f"not a boolean: {value!r}")
    if style is None:
        style = rules.bool_style
    elif isinstance(style, str):
        style = BoolStyle.from_name(style)
    elif not isinstance(style, BoolStyle):
        raise UnknownStyleError(f"not a boolean style: {style!r}")
    return style.true_token if value else style.false_token


def v2s_intvec(
    values: Sequence[int],
    spec: SpecLike = None,
    rules: DefaultRules = DEFAULT_RULES,
) -> str:
    """Convert an integer vector to one ``| value |`` line per element.

    Elements are rendered width-faithfully so a common spec such as I2
    aligns the column; lines are joined with the rules' newline.
    """
    if len(values) == 0:
        raise RenderError("cannot convert an empty integer vector")
    desc = _resolve_spec(spec, rules.int_spec, (IntDesc,), "integer")
    lines = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise RenderError(f"not an integer: {v!r}")
        lines.append(f"| {render_int(v, desc, SignMode.SUPPRESS)} |")
    return rules.newline.join(lines)


def v2s_user(value: Stringifiable) -> str:
    """Convert a user-defined value through its ``to_text`` method."""
    if not isinstance(value, Stringifiable):
        raise RenderError(f"{value!r} does not provide to_text()")
    return value.to_text()


def v2s(value, spec: SpecLike = None, rules: DefaultRules = DEFAULT_RULES) -> str:
    """Convert any supported value, dispatching on its type.

    For booleans ``spec`` names the style; for integers and reals it is
    the edit descriptor; integer sequences become vector output; other
    objects must provide ``to_text``.
    """
    if isinstance(value, bool):
        return v2s_bool(value, spec, rules)
    if isinstance(value, int):
        return v2s_int(value, spec, rules)
    if isinstance(value, float):
        return v2s_real(value, spec, rules)
    if isinstance(value, str):
        raise TypeError("strings need no conversion")
    if isinstance(value, (list, tuple)):
        return v2s_intvec(value, spec, rules)
    if isinstance(value, Stringifiable):
        return v2s_user(value)
    raise TypeError(f"no conversion for {type(value).__name__} values")


_POINT_FORMAT: FormatList = parse("('(',SP,F0.1,', ',SP,F0.1,', ',SP,F0.1,')')")


@dataclass(frozen=True)
class Point3D:
    """A 3-component point that renders as ``(+x, +y, +z)``."""

    x: float
    y: float
    z: float

    def to_text(self) -> str:
        return render(_POINT_FORMAT, [self.x, self.y, self.z])
