import logging
import time


class CustomFormatter(logging.Formatter):
    """ISO-8601 timestamps with milliseconds; shared by the console and file handlers."""

    def __init__(self, format_string: str):
        super().__init__(fmt=format_string)

    def formatTime(self, record: logging.LogRecord, datefmt: str | None = None) -> str:
        return time.strftime("%Y-%m-%dT%H:%M:%S", time.localtime(record.created)) + f".{int(record.msecs):03d}"
