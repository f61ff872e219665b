"""Stream-style message assembly with chainable appends and manipulators.

A :class:`StreamBuilder` collects text pieces and converted values in
order and joins them on :meth:`finish`.  The ``<<`` operator mirrors the
method chain, and the manipulators ``showpos``/``noshowpos``,
``setprecision(d)`` and ``setw(w)`` adjust how subsequent numeric values
are rendered.  All manipulator state is local to one builder: two
builders never influence each other.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .editdesc import FixedDesc, IntDesc, SignMode
from .stringify import (
    DEFAULT_RULES,
    BoolStyle,
    DefaultRules,
    Stringifiable,
    v2s_bool,
    v2s_int,
    v2s_real,
    v2s_user,
)


@dataclass(frozen=True)
class _SignManipulator:
    mode: SignMode

    def _apply(self, builder: "StreamBuilder") -> None:
        builder._sign = self.mode


@dataclass(frozen=True)
class _PrecisionManipulator:
    digits: int

    def _apply(self, builder: "StreamBuilder") -> None:
        builder._precision = self.digits


@dataclass(frozen=True)
class _WidthManipulator:
    width: int

    def _apply(self, builder: "StreamBuilder") -> None:
        builder._width = self.width


showpos = _SignManipulator(SignMode.PLUS)
noshowpos = _SignManipulator(SignMode.SUPPRESS)


def setprecision(digits: int) -> _PrecisionManipulator:
    """Manipulator: fractional digits for subsequent reals (persistent)."""
    if digits < 0:
        raise ValueError("precision must be non-negative")
    return _PrecisionManipulator(digits)


def setw(width: int) -> _WidthManipulator:
    """Manipulator: field width for the next numeric value only."""
    if width < 0:
        raise ValueError("width must be non-negative")
    return _WidthManipulator(width)


_MANIPULATORS = (_SignManipulator, _PrecisionManipulator, _WidthManipulator)


class StreamBuilder:
    """Accumulates message pieces; values are converted as they arrive.

    Sign mode and precision persist until changed; a pending width is
    consumed by the next integer or real append.  ``finish`` seals the
    builder, after which only ``reset`` makes it usable again.
    """

    def __init__(
        self,
        rules: DefaultRules = DEFAULT_RULES,
        bool_style: BoolStyle | str | None = None,
    ):
        self._rules = rules
        self._initial_bool_style = bool_style
        self._parts: list[str] = []
        self._sign = SignMode.SUPPRESS
        self._precision: int | None = None
        self._width: int | None = None
        self._bool_style = bool_style
        self._finished = False

    def _check_open(self):
        if self._finished:
            raise RuntimeError("stream already finished; call reset() first")

    def _take_width(self) -> int | None:
        width, self._width = self._width, None
        return width

    # -- appends ----------------------------------------------------------

    def append_text(self, text: str) -> "StreamBuilder":
        self._check_open()
        if not isinstance(text, str):
            raise TypeError(f"not text: {text!r}")
        self._parts.append(text)
        return self

    def append_int(self, value: int) -> "StreamBuilder":
        self._check_open()
        width = self._take_width()
        desc = self._rules.int_spec if width is None else IntDesc(width)
        self._parts.append(
            v2s_int(value, desc, self._rules, sign=self._sign, trim=False)
        )
        return self

    def append_real(self, value: float) -> "StreamBuilder":
        self._check_open()
        width = self._take_width()
        if self._precision is not None:
            desc = FixedDesc(width or 0, self._precision)
        elif width is not None:
            desc = dataclasses.replace(self._rules.real_spec, width=width)
        else:
            desc = self._rules.real_spec
        self._parts.append(
            v2s_real(value, desc, self._rules, sign=self._sign, trim=False)
        )
        return self

    def append_bool(self, value: bool) -> "StreamBuilder":
        self._check_open()
        self._parts.append(v2s_bool(value, self._bool_style, self._rules))
        return self

    def append_user(self, value: Stringifiable) -> "StreamBuilder":
        self._check_open()
        self._parts.append(v2s_user(value))
        return self

    def append(self, item) -> "StreamBuilder":
        """Dispatch on the item type; manipulators adjust state instead."""
        self._check_open()
        if isinstance(item, str):
            return self.append_text(item)
        if isinstance(item, bool):
            return self.append_bool(item)
        if isinstance(item, int):
            return self.append_int(item)
        if isinstance(item, float):
            return self.append_real(item)
        if isinstance(item, _MANIPULATORS):
            item._apply(self)
            return self
        if isinstance(item, Stringifiable):
            return self.append_user(item)
        raise TypeError(f"cannot append {type(item).__name__} values")

    __lshift__ = append

    # -- manipulator method forms -----------------------------------------

    def showpos(self) -> "StreamBuilder":
        self._check_open()
        self._sign = SignMode.PLUS
        return self

    def noshowpos(self) -> "StreamBuilder":
        self._check_open()
        self._sign = SignMode.SUPPRESS
        return self

    def setprecision(self, digits: int) -> "StreamBuilder":
        self._check_open()
        setprecision(digits)._apply(self)
        return self

    def setw(self, width: int) -> "StreamBuilder":
        self._check_open()
        setw(width)._apply(self)
        return self

    # -- results -----------------------------------------------------------

    @property
    def buffer(self) -> str:
        """The message assembled so far, without sealing the builder."""
        return "".join(self._parts)

    def finish(self) -> str:
        """Seal the builder and return the assembled message."""
        self._finished = True
        return "".join(self._parts)

    def reset(self) -> "StreamBuilder":
        """Discard all content and state; the builder is reusable again."""
        self._parts = []
        self._sign = SignMode.SUPPRESS
        self._precision = None
        self._width = None
        self._bool_style = self._initial_bool_style
        self._finished = False
        return self
