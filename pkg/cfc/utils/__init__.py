from cfc.utils.utils import (
    format_seconds_to_hhmmss,
    iter_data_lines,
    log_time,
    read_text,
    write_text,
)

__all__ = [
    "format_seconds_to_hhmmss",
    "iter_data_lines",
    "log_time",
    "read_text",
    "write_text",
]
