import logging
from logging.config import dictConfig
from pathlib import Path

from .filters.delta_time import DeltaTimeFilter
from .formatters.custom_formatter import CustomFormatter
from .handlers.colored_console import ColoredConsoleHandler
from .log_format_string import LOG_FORMAT_STRING
from .log_levels import LogLevels


class LoggerBuilder:

    def __init__(self,
                 level: LogLevels,
                 log_file_path: Path | None = None):
        self.level = level
        self.log_file_path = log_file_path
        dictConfig({"version": 1, "disable_existing_loggers": False})

    def _configure_root_logger(self):
        root = logging.getLogger()
        root.setLevel(self.level.value)

        for handler in root.handlers[:]:
            if isinstance(handler, (ColoredConsoleHandler, logging.FileHandler)):
                root.removeHandler(handler)

        if self.log_file_path is not None:
            root.addHandler(self._build_file_handler())

        root.addHandler(self._build_console_handler())

    def _build_console_handler(self):
        handler = ColoredConsoleHandler()
        handler.setLevel(self.level.value)
        return handler

    def _build_file_handler(self):
        Path(self.log_file_path).parent.mkdir(exist_ok=True, parents=True)
        handler = logging.FileHandler(self.log_file_path, encoding="utf-8")
        handler.setFormatter(CustomFormatter(LOG_FORMAT_STRING))
        handler.addFilter(DeltaTimeFilter())
        handler.setLevel(LogLevels.TRACE.value)
        return handler

    def configure(self):
        self._configure_root_logger()
