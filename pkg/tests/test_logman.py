"""Log manager: gating, indentation, sinks, config, env overrides."""

from __future__ import annotations

import threading

import pytest

from strfmt import (
    ENV_LEVEL,
    ENV_RANK,
    TERMINAL,
    FileSink,
    LogConfig,
    LogLevel,
    LogManager,
    parse_config,
)


def manager(**kwargs) -> LogManager:
    return LogManager(LogConfig(**kwargs), apply_env=False)


class TestGating:
    def test_level_below_threshold_suppressed(self, capsys):
        m = manager(threshold=LogLevel.INFO)
        result = m.debug("x")
        assert not result.emitted
        assert capsys.readouterr().out == ""

    def test_level_at_threshold_emitted(self, capsys):
        m = manager(threshold=LogLevel.INFO)
        assert m.info("x").emitted
        assert capsys.readouterr().out == "x\n"

    def test_level_above_threshold_emitted(self, capsys):
        m = manager(threshold=LogLevel.INFO)
        assert m.warning("x").emitted
        assert capsys.readouterr().out == "x\n"

    def test_foreign_rank_suppressed(self, capsys):
        m = manager(own_rank=1, emit_rank=0)
        assert not m.warning("x").emitted
        assert capsys.readouterr().out == ""

    def test_matching_nonzero_rank_emits(self, capsys):
        m = manager(own_rank=2, emit_rank=2)
        assert m.info("x").emitted
        assert capsys.readouterr().out == "x\n"

    def test_levels_are_ordered(self):
        assert LogLevel.DEBUG < LogLevel.INFO < LogLevel.WARNING


class TestIndentation:
    def test_indent_prefix(self, capsys):
        m = manager(indent_level=2)
        m.info("x")
        assert capsys.readouterr().out == "    x\n"

    def test_multiline_indents_every_line(self, capsys):
        m = manager(indent_level=1)
        m.info("a\nb\nc")
        assert capsys.readouterr().out == "  a\n  b\n  c\n"

    def test_line_count_preserved(self, capsys):
        m = manager()
        m.info("1\n2\n3\n4")
        assert capsys.readouterr().out.count("\n") == 4

    def test_push_pop(self, capsys):
        m = manager()
        m.push_indent().push_indent()
        m.info("deep")
        m.pop_indent()
        m.info("shallow")
        assert capsys.readouterr().out == "    deep\n  shallow\n"

    def test_pop_at_zero_raises(self):
        with pytest.raises(ValueError):
            manager().pop_indent()

    def test_set_indent(self, capsys):
        m = manager(indent_unit="....")
        m.set_indent(2)
        m.info("x")
        assert capsys.readouterr().out == "........x\n"

    def test_empty_message_still_one_line(self, capsys):
        m = manager(indent_level=1)
        m.info("")
        assert capsys.readouterr().out == "  \n"


class TestSinks:
    def test_file_sink(self, tmp_path):
        path = str(tmp_path / "run.log")
        m = manager(sinks=(FileSink(path),))
        m.info("hello")
        m.warning("world")
        with open(path, encoding="utf-8") as fh:
            assert fh.read() == "hello\nworld\n"

    def test_multi_sink_byte_equality(self, tmp_path, capsys):
        path = str(tmp_path / "run.log")
        m = manager(sinks=(TERMINAL, FileSink(path)))
        m.info("one\ntwo")
        m.warning("three")
        captured = capsys.readouterr().out
        with open(path, encoding="utf-8") as fh:
            assert fh.read() == captured

    def test_crlf_bytes_identical(self, tmp_path):
        path = str(tmp_path / "run.log")
        m = manager(sinks=(FileSink(path),), newline="\r\n")
        m.info("a\nb")
        with open(path, "rb") as fh:
            assert fh.read() == b"a\r\nb\r\n"

    def test_unwritable_file_raises_at_construction(self, tmp_path):
        bad = str(tmp_path / "missing-dir" / "run.log")
        with pytest.raises(OSError):
            manager(sinks=(FileSink(bad),))

    def test_sink_failure_reported_not_raised(self, tmp_path):
        path = tmp_path / "run.log"
        m = manager(sinks=(FileSink(str(path)),))
        # make the path unopenable after construction
        path.unlink()
        path.mkdir()
        result = m.info("x")
        assert result.emitted
        assert len(result.failures) == 1

    def test_set_sinks_switches_destination(self, tmp_path, capsys):
        path = str(tmp_path / "run.log")
        m = manager()
        m.set_sinks(FileSink(path))
        m.info("to file")
        assert capsys.readouterr().out == ""
        with open(path, encoding="utf-8") as fh:
            assert fh.read() == "to file\n"

    def test_empty_sinks_rejected(self):
        with pytest.raises(ValueError):
            manager().set_sinks()


class TestTruncation:
    def test_truncated_to_limit(self, capsys):
        m = manager(max_message_length=4)
        m.info("abcdefgh")
        assert capsys.readouterr().out == "abcd\n"

    def test_no_marker_appended(self, capsys):
        m = manager(max_message_length=3)
        m.info("xyz-tail")
        out = capsys.readouterr().out
        assert out == "xyz\n"

    def test_indent_not_counted(self, capsys):
        m = manager(max_message_length=4, indent_level=2)
        m.info("abcdefgh")
        assert capsys.readouterr().out == "    abcd\n"


class TestTimestamps:
    def test_prefix_on_first_line_only(self, capsys):
        m = manager(timestamps=True, indent_level=1)
        m.info("a\nb")
        first, second, _ = capsys.readouterr().out.split("\n")
        assert first.startswith("  ")
        # ISO-8601 local time: YYYY-MM-DD HH:MM:SS
        stamp = first[2:22]
        assert stamp[4] == "-" and stamp[7] == "-" and stamp[13] == ":"
        assert first.endswith(" a")
        assert second == "  b"


class TestEnvOverrides:
    def test_level_override(self, monkeypatch, capsys):
        monkeypatch.setenv(ENV_LEVEL, "warning")
        m = LogManager(LogConfig(threshold=LogLevel.DEBUG))
        assert not m.info("x").emitted
        assert m.warning("y").emitted
        assert capsys.readouterr().out == "y\n"

    def test_rank_override(self, monkeypatch, capsys):
        monkeypatch.setenv(ENV_RANK, "3")
        m = LogManager(LogConfig(emit_rank=0))
        assert not m.info("x").emitted
        assert capsys.readouterr().out == ""

    def test_invalid_level_rejected(self, monkeypatch):
        monkeypatch.setenv(ENV_LEVEL, "chatty")
        with pytest.raises(ValueError):
            LogManager(LogConfig())

    def test_invalid_rank_rejected(self, monkeypatch):
        monkeypatch.setenv(ENV_RANK, "minus-one")
        with pytest.raises(ValueError):
            LogManager(LogConfig())

    def test_env_ignored_when_disabled(self, monkeypatch, capsys):
        monkeypatch.setenv(ENV_LEVEL, "warning")
        m = LogManager(LogConfig(threshold=LogLevel.DEBUG), apply_env=False)
        assert m.debug("x").emitted
        capsys.readouterr()


class TestConfigFile:
    def test_full_config(self, tmp_path):
        cfg = parse_config(
            "# run settings\n"
            "level = debug\n"
            "\n"
            "sinks = terminal,file\n"
            f"file = {tmp_path / 'x.log'}\n"
            "indent_unit = ->\n"
            "emit_rank = 2\n"
            "timestamps = true\n"
            "newline = crlf\n"
        )
        assert cfg.threshold == LogLevel.DEBUG
        assert cfg.sinks == (TERMINAL, FileSink(str(tmp_path / "x.log")))
        assert cfg.indent_unit == "->"
        assert cfg.emit_rank == 2
        assert cfg.timestamps is True
        assert cfg.newline == "\r\n"

    def test_defaults_when_empty(self):
        cfg = parse_config("")
        assert cfg == LogConfig()

    def test_last_assignment_wins(self):
        cfg = parse_config("level=debug\nlevel=warning\n")
        assert cfg.threshold == LogLevel.WARNING

    def test_unknown_key_rejected(self):
        with pytest.raises(ValueError):
            parse_config("verbosity=high\n")

    def test_missing_equals_rejected(self):
        with pytest.raises(ValueError):
            parse_config("just some words\n")

    def test_file_sink_requires_path(self):
        with pytest.raises(ValueError):
            parse_config("sinks=file\n")

    def test_unknown_sink_rejected(self):
        with pytest.raises(ValueError):
            parse_config("sinks=syslog\n")

    def test_bad_level_rejected(self):
        with pytest.raises(ValueError):
            parse_config("level=loud\n")

    def test_bad_newline_rejected(self):
        with pytest.raises(ValueError):
            parse_config("newline=cr\n")


class TestConcurrency:
    def test_records_never_interleave(self, tmp_path):
        path = str(tmp_path / "run.log")
        m = manager(sinks=(FileSink(path),))

        def worker(tag: str):
            for i in range(50):
                m.info(f"{tag}-{i}")

        threads = [threading.Thread(target=worker, args=(t,)) for t in "abcd"]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        assert len(lines) == 200
        assert sorted(lines) == sorted(
            f"{tag}-{i}" for tag in "abcd" for i in range(50)
        )
