import logging
import sys

from ..filters.delta_time import DeltaTimeFilter
from ..formatters.color_formatter import ColorFormatter
from ..log_format_string import COLOR_LOG_FORMAT_STRING


class ColoredConsoleHandler(logging.StreamHandler):
    """Colorized console output with Δt and per-thread coloring, on stderr (stdout carries the CLI JSON)."""

    def __init__(self, stream=None):
        super().__init__(stream if stream is not None else sys.stderr)
        self.setFormatter(ColorFormatter(COLOR_LOG_FORMAT_STRING))
        self.addFilter(DeltaTimeFilter())
