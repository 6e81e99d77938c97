import logging
from pathlib import Path

from .log_levels import LogLevels
from .logger_builder import LoggerBuilder
from .package_log_quieters import suppress_noisy_package_logs

# custom level -> Logger method name
CUSTOM_LEVEL_METHODS = {
    LogLevels.LOOP: "loop",
    LogLevels.TRACE: "trace",
    LogLevels.SUCCESS: "success",
}


def _install_level(level: LogLevels, method_name: str) -> None:
    logging.addLevelName(level.value, level.name)

    def log_method(self: logging.Logger, message, *args, **kwargs):
        if self.isEnabledFor(level.value):
            self._log(level.value, message, args, **kwargs, stacklevel=2)

    setattr(logging.Logger, method_name, log_method)


def install_custom_levels() -> None:
    for level, method_name in CUSTOM_LEVEL_METHODS.items():
        _install_level(level, method_name)


suppress_noisy_package_logs()
install_custom_levels()


def configure_logging(level: LogLevels | str, log_file_path: Path | None = None) -> None:
    """(Re)configure the root logger; safe to call once per CLI invocation or test."""
    if isinstance(level, str):
        level = LogLevels.from_name(level)
    LoggerBuilder(level, log_file_path).configure()
