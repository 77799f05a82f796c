import io
import logging
import sys

import pytest

from cfc.logging import LoggerManager
from cfc.utils.utils import format_seconds_to_hhmmss, iter_data_lines, log_time, write_text


@pytest.fixture
def manager(monkeypatch):
    monkeypatch.setattr(sys, "excepthook", sys.excepthook)
    return LoggerManager("verify", "/opt/cfc/cli.py")


def test_levels_are_kept_apart(manager):
    manager.log("info", "reading graph")
    manager.log("data", "RESULT valid colors=2 colored=4")
    manager.log("debug", "detail")
    assert manager.info_logs == ["reading graph"]
    assert manager.data_logs == ["RESULT valid colors=2 colored=4"]
    assert manager.debug_logs == ["detail"]
    assert manager.succeeded


def test_warnings_mark_failure(manager):
    manager.log("warning", "budget exhausted")
    assert manager.warning_logs == ["budget exhausted"]
    assert not manager.succeeded


def test_run_log_frame(manager):
    manager.start_timer()
    manager.log("error", "bad input")
    elapsed = manager.end_timer()
    frame = manager.run_log_frame()
    assert list(frame.columns) == ["process_id", "task", "step", "status", "log_message"]
    assert list(frame["step"]) == [1, 2, 3, 4]
    assert list(frame["status"]) == ["In Progress", "ERROR", "Completed", "In Progress"]
    assert frame["task"].iloc[0] == "cli.py verify"
    assert elapsed >= 0


def test_display_logs(manager):
    manager.log("warning", "slow")
    stream = io.StringIO()
    manager.display_logs("warning", stream=stream)
    assert stream.getvalue() == "Warning Logs:\nslow\n"
    stream = io.StringIO()
    manager.display_logs("verbose", stream=stream)
    assert stream.getvalue() == "Invalid log level\n"


def test_log_exceptions_records_unhandled_errors(manager):
    manager.log_exceptions()
    try:
        raise RuntimeError("boom")
    except RuntimeError:
        sys.excepthook(*sys.exc_info())
    assert "boom" in manager.error_logs[0]


def test_log_time(caplog):
    @log_time
    def double(x):
        return 2 * x

    with caplog.at_level(logging.INFO):
        assert double(4) == 8
    assert "Executed double" in caplog.text


@pytest.mark.parametrize(
    "seconds, text", [(0, "00:00:00"), (61, "00:01:01"), (3725.5, "01:02:05")]
)
def test_format_seconds(seconds, text):
    assert format_seconds_to_hhmmss(seconds) == text


def test_iter_data_lines_skips_comments():
    text = "# header\n\n3 2\n  # indented\n0 1\n"
    assert list(iter_data_lines(text)) == [(3, ["3", "2"]), (5, ["0", "1"])]


def test_write_text_creates_folders(tmp_path):
    target = write_text(tmp_path / "a" / "b.txt", "x\n")
    assert target.read_text() == "x\n"
