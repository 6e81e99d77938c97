import logging
import threading
import time


class DeltaTimeFilter(logging.Filter):
    """Stamps each record with the time since the previous record seen by this filter."""

    def __init__(self):
        super().__init__()
        self._lock = threading.Lock()
        self._previous = time.perf_counter()

    def filter(self, record: logging.LogRecord) -> bool:
        with self._lock:
            now = time.perf_counter()
            record.delta_t = f"Δ{(now - self._previous) * 1000:.3f}ms"
            self._previous = now
        return True
