"""Verbosity- and rank-gated log manager with pluggable sinks.

A message is emitted only when this process owns the emitting rank and
the message level clears the threshold.  Emitted text is identical on
every sink, byte for byte: the same indentation, the same newline, the
same optional timestamp.  Configuration comes from a ``key=value`` file
and may be overridden by the ``STRFMT_LOG_LEVEL`` and
``STRFMT_LOG_RANK`` environment variables.
"""

from __future__ import annotations

import datetime as _dt
import os
import sys
import threading
from dataclasses import dataclass, field, replace
from enum import IntEnum
from typing import Union


class LogLevel(IntEnum):
    """Message severities, ordered so comparisons express verbosity."""

    DEBUG = 10
    INFO = 20
    WARNING = 30

    @classmethod
    def from_name(cls, name: str) -> "LogLevel":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown log level {name!r}") from None


@dataclass(frozen=True)
class Terminal:
    """Marker sink: write to standard output."""


TERMINAL = Terminal()


@dataclass(frozen=True)
class FileSink:
    """Sink that appends to a file, creating it on first write."""

    path: str


Sink = Union[Terminal, FileSink]

ENV_LEVEL = "STRFMT_LOG_LEVEL"
ENV_RANK = "STRFMT_LOG_RANK"


@dataclass(frozen=True)
class LogConfig:
    """Immutable manager settings; see module docstring for semantics."""

    threshold: LogLevel = LogLevel.INFO
    indent_level: int = 0
    indent_unit: str = "  "
    sinks: tuple[Sink, ...] = (TERMINAL,)
    own_rank: int = 0
    emit_rank: int = 0
    newline: str = "\n"
    max_message_length: int | None = None
    timestamps: bool = False

    def __post_init__(self):
        if self.indent_level < 0:
            raise ValueError("indent level must be non-negative")
        if self.own_rank < 0 or self.emit_rank < 0:
            raise ValueError("ranks must be non-negative")
        if self.newline not in ("\n", "\r\n"):
            raise ValueError("newline must be LF or CRLF")
        if self.max_message_length is not None and self.max_message_length < 1:
            raise ValueError("maximum message length must be positive")


@dataclass(frozen=True)
class EmitResult:
    """Outcome of one log call: whether it emitted, and any sink failures."""

    emitted: bool
    failures: tuple[str, ...] = ()


_CONFIG_KEYS = (
    "level",
    "sinks",
    "file",
    "indent_unit",
    "emit_rank",
    "timestamps",
    "newline",
)


def parse_config(text: str) -> LogConfig:
    """Parse ``key=value`` configuration text into a :class:`LogConfig`.

    Blank lines and ``#`` comments are skipped; the last assignment of a
    key wins; unknown keys are rejected.
    """
    settings: dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ValueError(f"line {line_no}: expected key=value, got {raw!r}")
        if key not in _CONFIG_KEYS:
            raise ValueError(f"line {line_no}: unknown configuration key {key!r}")
        settings[key] = value.strip()

    config = LogConfig()
    if "level" in settings:
        config = replace(config, threshold=LogLevel.from_name(settings["level"]))
    if "indent_unit" in settings:
        config = replace(config, indent_unit=settings["indent_unit"])
    if "emit_rank" in settings:
        config = replace(config, emit_rank=_parse_int(settings["emit_rank"], "emit_rank"))
    if "timestamps" in settings:
        config = replace(config, timestamps=_parse_flag(settings["timestamps"]))
    if "newline" in settings:
        name = settings["newline"].lower()
        if name not in ("lf", "crlf"):
            raise ValueError(f"newline must be 'lf' or 'crlf', got {settings['newline']!r}")
        config = replace(config, newline="\n" if name == "lf" else "\r\n")
    if "sinks" in settings:
        config = replace(config, sinks=_parse_sinks(settings["sinks"], settings.get("file")))
    elif "file" in settings:
        raise ValueError("config key 'file' requires sinks to include 'file'")
    return config


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text!r}") from None


def _parse_flag(text: str) -> bool:
    name = text.strip().lower()
    if name in ("true", "on", "yes", "1"):
        return True
    if name in ("false", "off", "no", "0"):
        return False
    raise ValueError(f"expected a boolean flag, got {text!r}")


def _parse_sinks(text: str, file_path: str | None) -> tuple[Sink, ...]:
    sinks: list[Sink] = []
    for name in text.split(","):
        name = name.strip().lower()
        if name == "terminal":
            sinks.append(TERMINAL)
        elif name == "file":
            if not file_path:
                raise ValueError("sink 'file' requires a 'file' key with a path")
            sinks.append(FileSink(file_path))
        elif name:
            raise ValueError(f"unknown sink {name!r}")
    if not sinks:
        raise ValueError("at least one sink is required")
    return tuple(sinks)


def load_config(path: str) -> LogConfig:
    """Read and parse a configuration file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_config(handle.read())


class LogManager:
    """Writes gated, indented messages identically to every sink."""

    def __init__(self, config: LogConfig | None = None, *, apply_env: bool = True):
        config = config or LogConfig()
        if apply_env:
            config = _apply_env(config)
        if not config.sinks:
            raise ValueError("at least one sink is required")
        for sink in config.sinks:
            if isinstance(sink, FileSink):
                # fail fast if the log file cannot be opened for append
                with open(sink.path, "a", encoding="utf-8"):
                    pass
        self._config = config
        self._indent_level = config.indent_level
        self._sinks = list(config.sinks)
        self._lock = threading.Lock()

    @property
    def config(self) -> LogConfig:
        return self._config

    @property
    def indent_level(self) -> int:
        return self._indent_level

    @property
    def sinks(self) -> tuple[Sink, ...]:
        return tuple(self._sinks)

    # -- indentation ---------------------------------------------------

    def set_indent(self, level: int) -> "LogManager":
        if level < 0:
            raise ValueError("indent level must be non-negative")
        self._indent_level = level
        return self

    def push_indent(self) -> "LogManager":
        self._indent_level += 1
        return self

    def pop_indent(self) -> "LogManager":
        if self._indent_level == 0:
            raise ValueError("indent level is already zero")
        self._indent_level -= 1
        return self

    def set_sinks(self, *sinks: Sink) -> "LogManager":
        if not sinks:
            raise ValueError("at least one sink is required")
        self._sinks = list(sinks)
        return self

    # -- emission --------------------------------------------------------

    def log_write(self, level: LogLevel, message: str) -> EmitResult:
        """Emit ``message`` at ``level`` if the gate passes.

        The gate: this process's rank equals the emitting rank, and the
        level is at or above the threshold.  Multi-line messages get the
        indentation prefix on every line; the optional timestamp goes
        after the indent of the first line only.
        """
        cfg = self._config
        if cfg.own_rank != cfg.emit_rank or level < cfg.threshold:
            return EmitResult(emitted=False)
        if cfg.max_message_length is not None:
            message = message[: cfg.max_message_length]
        indent = cfg.indent_unit * self._indent_level
        lines = message.splitlines() or [""]
        stamp = ""
        if cfg.timestamps:
            stamp = _dt.datetime.now().isoformat(sep=" ", timespec="seconds") + " "
        body = cfg.newline.join(
            indent + (stamp if i == 0 else "") + line for i, line in enumerate(lines)
        ) + cfg.newline
        failures: list[str] = []
        with self._lock:
            for sink in self._sinks:
                try:
                    _write_sink(sink, body)
                except OSError as exc:
                    failures.append(f"{_sink_name(sink)}: {exc}")
        return EmitResult(emitted=True, failures=tuple(failures))

    def debug(self, message: str) -> EmitResult:
        return self.log_write(LogLevel.DEBUG, message)

    def info(self, message: str) -> EmitResult:
        return self.log_write(LogLevel.INFO, message)

    def warning(self, message: str) -> EmitResult:
        return self.log_write(LogLevel.WARNING, message)


def _apply_env(config: LogConfig) -> LogConfig:
    level = os.environ.get(ENV_LEVEL)
    if level is not None:
        config = replace(config, threshold=LogLevel.from_name(level))
    rank = os.environ.get(ENV_RANK)
    if rank is not None:
        value = _parse_int(rank, ENV_RANK)
        if value < 0:
            raise ValueError(f"{ENV_RANK} must be non-negative")
        config = replace(config, own_rank=value)
    return config


def _write_sink(sink: Sink, body: str) -> None:
    if isinstance(sink, Terminal):
        # looked up at call time so output capture in tests sees it
        sys.stdout.write(body)
        return
    # newline='' keeps CRLF bodies byte-identical with terminal output
    with open(sink.path, "a", encoding="utf-8", newline="") as handle:
        handle.write(body)


def _sink_name(sink: Sink) -> str:
    return "terminal" if isinstance(sink, Terminal) else sink.path
