"""
Configuración centralizada de frobmaps — Frobenius ideal data in prime characteristic
"""

from __future__ import annotations

import os
import sys
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError:
        print(f"⚠️  {name}={raw!r} is not an integer, using {default}", file=sys.stderr)
        return default


class Config:
    """Configuración cargada desde variables de entorno."""

    # ======================================================================
    # ENVIRONMENT
    # ======================================================================
    ENV: str = os.getenv("FROBENIUS_ENV", "development")  # development, production
    IS_PRODUCTION: bool = ENV == "production"
    VERSION: str = "1.0.0"

    # ======================================================================
    # RUTAS
    # ======================================================================
    BASE_DIR: Path = Path(__file__).parent

    # ======================================================================
    # LOGGING
    # ======================================================================
    LOG_LEVEL: str = os.getenv("FROBENIUS_LOG_LEVEL", "INFO").upper()
    LOG_FILE: str = os.getenv("FROBENIUS_LOG_FILE", "")

    # ======================================================================
    # ARITHMETIC
    # ======================================================================
    # Exponents are checked against this ceiling; 2**62 keeps pairwise sums inside int64.
    MAX_EXPONENT: int = _int_env("FROBENIUS_MAX_EXPONENT", 2**62)
    DEFAULT_ORDER: str = os.getenv("FROBENIUS_DEFAULT_ORDER", "degrevlex")

    # ======================================================================
    # RESOURCE GUARD (Buchberger)
    # ======================================================================
    MAX_BASIS_SIZE: int = _int_env("FROBENIUS_MAX_BASIS_SIZE", 20_000)
    MAX_PAIRS: int = _int_env("FROBENIUS_MAX_PAIRS", 5_000_000)

    # ======================================================================
    # CONCURRENCY + MEMO
    # ======================================================================
    WORKERS: int = _int_env("FROBENIUS_WORKERS", 1)
    MEMO_SIZE: int = _int_env("FROBENIUS_MEMO_SIZE", 4096)

    # ======================================================================
    # VALIDATION
    # ======================================================================
    @classmethod
    def validate(cls) -> tuple[bool, list[str]]:
        """Valida la configuración y retorna errores/warnings."""
        errors = []
        warnings = []

        if cls.MAX_EXPONENT < 2**31:
            errors.append(f"CRITICAL: FROBENIUS_MAX_EXPONENT={cls.MAX_EXPONENT} is below 2**31")
        if cls.MAX_EXPONENT > 2**62:
            errors.append("CRITICAL: FROBENIUS_MAX_EXPONENT above 2**62 would overflow int64 exponent sums")

        if cls.DEFAULT_ORDER not in ("lex", "grlex", "degrevlex"):
            errors.append(f"CRITICAL: unknown FROBENIUS_DEFAULT_ORDER {cls.DEFAULT_ORDER!r}")

        if cls.MAX_BASIS_SIZE < 1 or cls.MAX_PAIRS < 1:
            errors.append("CRITICAL: Buchberger resource limits must be positive")

        if cls.WORKERS < 1:
            errors.append("CRITICAL: FROBENIUS_WORKERS must be at least 1")

        if cls.MEMO_SIZE < 16:
            warnings.append("WARNING: FROBENIUS_MEMO_SIZE is tiny - K_e values will be recomputed")

        if cls.LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            warnings.append(f"WARNING: unknown FROBENIUS_LOG_LEVEL {cls.LOG_LEVEL!r}, INFO will be used")

        for warning in warnings:
            print(f"⚠️  {warning}", file=sys.stderr)

        return len(errors) == 0, errors
