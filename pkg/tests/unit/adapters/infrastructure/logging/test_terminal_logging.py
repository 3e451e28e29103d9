"""Unit tests for TerminalLogger class."""

import pytest

from jammer_localization.adapters.infrastructure.logging.terminal_logging import TerminalLogger


class TestTerminalLogger:
    """Test suite for TerminalLogger."""

    def test_levels_go_to_stderr(self, capsys):
        """Test that stdout stays clean and the level filter applies."""
        log = TerminalLogger(name="test", log_level="INFO")

        log.debug("hidden detail")
        log.info("sweep started")
        log.warning("some trials failed")
        log.shutdown()

        captured = capsys.readouterr()
        assert captured.out == ""
        assert "sweep started" in captured.err
        assert "some trials failed" in captured.err
        assert "hidden detail" not in captured.err

    def test_dicts_are_rendered_as_json(self):
        """Test message rendering."""
        assert TerminalLogger.render({"value": 0.5, "lse": 1.25}) == '{\n    "value": 0.5,\n    "lse": 1.25\n}'
        assert TerminalLogger.render("plain") == "plain"
        assert TerminalLogger.render((1, 2)) == "(1, 2)"

    def test_braces_are_not_format_fields(self, capsys):
        """Test that JSON payloads are logged verbatim."""
        log = TerminalLogger(log_level="DEBUG")

        log.debug({"scenario": {"trials": 3}})

        assert '"trials": 3' in capsys.readouterr().err

    def test_log_file(self, tmp_path):
        """Test the optional file sink."""
        path = tmp_path / "run.log"
        log = TerminalLogger(log_level="INFO", log_file=str(path))

        log.info("written to file")
        log.shutdown()

        assert "written to file" in path.read_text(encoding="utf-8")

    def test_unknown_level(self):
        """Test that a misspelled level is refused."""
        with pytest.raises(ValueError):
            TerminalLogger(log_level="VERBOSE")
