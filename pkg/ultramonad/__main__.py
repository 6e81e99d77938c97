import logging
import sys

import ultramonad
from ultramonad.cli.run_cli import run

logger = logging.getLogger(__name__)

logger.debug(f"Initializing {ultramonad.__package_name__} package, version: {ultramonad.__version__}, "
             f"from file: {__file__}")


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
