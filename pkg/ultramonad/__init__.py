"""Exact max-min and max-plus measure monads on finite ultrametric spaces."""

__author__ = """ultramonad developers"""
__version__ = "v0.1.0"
__description__ = "Exact max-min and max-plus measure monads on finite ultrametric spaces"

__package_name__ = "ultramonad"

from ultramonad.system.logging_configuration.configure_logging import configure_logging
from ultramonad.system.logging_configuration.log_levels import LogLevels

LOG_LEVEL = LogLevels.WARNING
configure_logging(LOG_LEVEL)
