"""
Error handling utilities for consistent error management across the library.
"""

from __future__ import annotations

import functools
import logging
from datetime import datetime, timezone
from typing import Any, Callable, Optional

logger = logging.getLogger(__name__)


# =============================================================================
# EXCEPTION HIERARCHY
# =============================================================================


class FrobeniusError(Exception):
    """Base class for every error raised by the library."""


class InputError(FrobeniusError):
    """Malformed user input (problem files, flags, presets)."""


class ProblemSyntaxError(InputError):
    """Syntax error in a problem file, located by line and column (both 1-based)."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


class UnknownVariableError(ProblemSyntaxError):
    """A polynomial mentions a name that is not in the variable list."""


class NonPrimeCharacteristicError(InputError, ValueError):
    """The characteristic is not a prime number."""


class ConfigurationError(FrobeniusError, ValueError):
    """Invalid ring, ladder or runtime configuration."""


class ContextMismatchError(FrobeniusError, ValueError):
    """Operands live in different rings (or have different monomial widths)."""


class ExponentOverflowError(FrobeniusError, OverflowError):
    """An exponent exceeded Config.MAX_EXPONENT."""


class ResourceLimitError(FrobeniusError):
    """A Gröbner computation crossed the configured basis-size or pair ceiling."""


class LevelDependencyError(FrobeniusError):
    """A ladder level cannot be computed because a lower level failed."""


class InternalError(FrobeniusError):
    """An invariant that cannot fail on correct input was violated."""


# Errors that end a CLI run with exit status 2 (partial report still emitted).
COMPUTATION_ERRORS = (ExponentOverflowError, ResourceLimitError, LevelDependencyError, InternalError)


# =============================================================================
# DECORATORS + CONTEXT MANAGERS
# =============================================================================


def log_errors(default: Any = None, log_level: str = "error", reraise: bool = True):
    """
    Decorator to log errors from a function.

    Args:
        default: Default value to return on error (if not reraising)
        log_level: Log level for errors ("debug", "info", "warning", "error")
        reraise: Whether to re-raise exception after logging

    Example:
        @log_errors(reraise=True)
        def run_check(args):
            # Errors are logged with their type before propagating
            return run_ladder(config)
    """

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            try:
                return func(*args, **kwargs)
            except Exception as e:
                log_func = getattr(logger, log_level.lower(), logger.error)
                # Expected domain failures don't need a traceback
                log_func(
                    f"{func.__name__} failed: {e}",
                    exc_info=not isinstance(e, FrobeniusError),
                    extra={
                        "function": func.__name__,
                        "error_type": type(e).__name__,
                        "timestamp": datetime.now(timezone.utc).isoformat(),
                    },
                )
                if reraise:
                    raise
                return default

        return wrapper

    return decorator


class ErrorContext:
    """Context manager for error handling with automatic logging."""

    def __init__(
        self,
        operation: str,
        reraise: bool = True,
        default: Any = None,
        log_level: str = "error",
        exceptions: tuple = (Exception,),
    ):
        """
        Args:
            operation: Description of the operation (for logging)
            reraise: Whether to re-raise exceptions
            default: Default value to return on error (if not reraising)
            log_level: Log level for errors
            exceptions: Only these exception types are logged and (optionally) suppressed
        """
        self.operation = operation
        self.reraise = reraise
        self.default = default
        self.log_level = log_level
        self.exceptions = exceptions
        self.result = None
        self.error: Optional[BaseException] = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if exc_type is not None and issubclass(exc_type, self.exceptions):
            self.error = exc_val
            log_func = getattr(logger, self.log_level.lower(), logger.error)
            log_func(f"Error in {self.operation}: {exc_val}", exc_info=not isinstance(exc_val, FrobeniusError))
            if not self.reraise:
                # Suppress exception and return default
                self.result = self.default
                return True
        return False


# Example usage:
#
# with ErrorContext("level e=3", reraise=False, exceptions=COMPUTATION_ERRORS) as ctx:
#     record = engine.finite_generation_step(3)
#
# if ctx.error:
#     logger.warning("level 3 recorded as failed")
