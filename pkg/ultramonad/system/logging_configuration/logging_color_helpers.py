RESET = "\033[0m"

LEVEL_COLORS = {
    "LOOP": "\033[90m",  # Grey
    "TRACE": "\033[37m",  # White
    "DEBUG": "\033[34m",  # Blue
    "INFO": "\033[96m",  # Cyan
    "SUCCESS": "\033[95m",  # Magenta
    "WARNING": "\033[33m",  # Yellow
    "ERROR": "\033[41m",  # Red background
}

_THREAD_PALETTE = tuple(f"\033[38;5;{code}m" for code in (39, 78, 141, 178, 208, 45, 170, 114))


def thread_color(thread_id: int) -> str:
    """A stable 256-color code per thread, so interleaved harness workers can be told apart."""
    return _THREAD_PALETTE[thread_id % len(_THREAD_PALETTE)]


def colorize(text: str, color: str) -> str:
    return f"{color}{text}{RESET}" if color else text
