import functools
import logging
import time
from pathlib import Path

import psutil


def format_seconds_to_hhmmss(seconds):
    hours = seconds // (60 * 60)
    seconds %= 60 * 60
    minutes = seconds // 60
    seconds %= 60
    return "%02i:%02i:%02i" % (hours, minutes, seconds)


def log_time(func):
    """A decorator that logs the time a function takes to execute."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start = time.time()
        result = func(*args, **kwargs)
        duration = time.time() - start
        logger = logging.getLogger(func.__module__)
        logger.info(
            f"Executed {func.__name__} in {format_seconds_to_hhmmss(duration)} ({duration:.3f}s)."
        )
        logger.debug(f"RAM Used (GB): {psutil.virtual_memory()[3] / 1000000000}")
        return result

    return wrapper


def read_text(path):
    """Read a UTF-8 text file, accepting str or Path."""
    return Path(path).read_text(encoding="utf-8")


def write_text(path, text):
    """Write text to ``path``, creating parent folders when missing."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    return target


def iter_data_lines(text):
    """Yield (line_number, tokens) for non-empty, non-comment lines."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()
