"""Fortran-style formatted output as a library.

The package splits into four layers: ``editdesc`` parses and renders
format edit descriptors, ``stringify`` converts single values with
per-type defaults, ``stream`` assembles messages iostream-style, and
``logman`` gates and routes finished messages.  The ``strfmt`` command
line exposes rendering and a golden conformance corpus runner.
"""

from .editdesc import (
    CharDesc,
    EditDescriptor,
    ExpDesc,
    FixedDesc,
    FormatList,
    Group,
    IntDesc,
    Literal,
    LogicalDesc,
    ParseError,
    RecordBreak,
    RenderError,
    SignControl,
    SignMode,
    parse,
    render,
    render_char,
    render_exp,
    render_fixed,
    render_int,
    render_logical,
    to_text,
)
from .logman import (
    ENV_LEVEL,
    ENV_RANK,
    TERMINAL,
    EmitResult,
    FileSink,
    LogConfig,
    LogLevel,
    LogManager,
    Terminal,
    load_config,
    parse_config,
)
from .stream import StreamBuilder, noshowpos, setprecision, setw, showpos
from .stringify import (
    CRLF,
    DEFAULT_RULES,
    NEWLINE,
    BoolStyle,
    DefaultRules,
    Point3D,
    Stringifiable,
    UnknownStyleError,
    v2s,
    v2s_bool,
    v2s_int,
    v2s_intvec,
    v2s_real,
    v2s_user,
)

__version__ = "0.1.0"

__all__ = [
    "BoolStyle",
    "CRLF",
    "CharDesc",
    "DEFAULT_RULES",
    "DefaultRules",
    "ENV_LEVEL",
    "ENV_RANK",
    "EditDescriptor",
    "EmitResult",
    "ExpDesc",
    "FileSink",
    "FixedDesc",
    "FormatList",
    "Group",
    "IntDesc",
    "Literal",
    "LogConfig",
    "LogLevel",
    "LogManager",
    "LogicalDesc",
    "NEWLINE",
    "ParseError",
    "Point3D",
    "RecordBreak",
    "RenderError",
    "SignControl",
    "SignMode",
    "StreamBuilder",
    "Stringifiable",
    "TERMINAL",
    "Terminal",
    "UnknownStyleError",
    "load_config",
    "noshowpos",
    "parse",
    "parse_config",
    "render",
    "render_char",
    "render_exp",
    "render_fixed",
    "render_int",
    "render_logical",
    "setprecision",
    "setw",
    "showpos",
    "to_text",
    "v2s",
    "v2s_bool",
    "v2s_int",
    "v2s_intvec",
    "v2s_real",
    "v2s_user",
]
