import logging
from copy import copy

from .custom_formatter import CustomFormatter
from ..logging_color_helpers import LEVEL_COLORS, colorize, thread_color


class ColorFormatter(CustomFormatter):
    """Whole line in the level's color, thread name in a per-thread color."""

    def format(self, record: logging.LogRecord) -> str:
        record = copy(record)
        record.thread_color = thread_color(record.thread or 0)
        return colorize(super().format(record), LEVEL_COLORS.get(record.levelname, ""))
