import logging
from enum import Enum


class LogLevels(Enum):
    ALL = logging.NOTSET
    LOOP = 3  # per-trial chatter from the law harnesses
    TRACE = 5
    DEBUG = logging.DEBUG
    INFO = logging.INFO
    SUCCESS = logging.INFO + 2  # a law suite or command finished cleanly
    WARNING = logging.WARNING  # failed laws land here
    ERROR = logging.ERROR

    @classmethod
    def from_name(cls, name: str) -> "LogLevels":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"Unknown log level {name!r}, expected one of {[level.name for level in cls]}")
