"""
frobmaps — command-line entry point
===================================
Frobenius-map ideal data (K_e, L_e, finite-generation verdicts) in prime characteristic.
"""

from __future__ import annotations

import logging
import sys
from typing import List, Optional

from config import Config

# ---------------------------------------------------------------------------
# Logging - stderr only (stdout carries reports), plus an optional file
# ---------------------------------------------------------------------------


def setup_logging() -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if Config.LOG_FILE:
        try:
            handlers.append(logging.FileHandler(Config.LOG_FILE, encoding="utf-8"))
        except (PermissionError, OSError):
            pass  # Skip file logging if not writable

    level = getattr(logging, Config.LOG_LEVEL, logging.INFO)
    logging.basicConfig(
        level=level if isinstance(level, int) else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        handlers=handlers,
        force=True,
    )


logger = logging.getLogger(__name__)


def main(argv: Optional[List[str]] = None) -> int:
    setup_logging()

    ok, errors = Config.validate()
    if not ok:
        for error in errors:
            logger.error(error)
        return 1

    from cli.commands import run_cli

    return run_cli(argv)


if __name__ == "__main__":
    sys.exit(main())
