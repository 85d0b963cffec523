# -*- coding: utf-8 -*-
"""
Exception hierarchy
===================

Validators report problems through ``CheckReport`` objects and never raise.
Everything else raises one of the classes below; the CLI maps them to exit
codes (see ``evrard_cli.EXIT_CODES``).
"""

from typing import Optional


class EvrardError(Exception):
    """Root of all errors raised by the package."""


class CategoryError(EvrardError, ValueError):
    """Undefined composite, unknown object/morphism, or mismatched shapes."""


class ValidationError(CategoryError):
    """
    An input that must be valid is not.

    Attributes:
        report: The ``CheckReport`` listing every violated law
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class InputError(EvrardError, ValueError):
    """A JSON document could not be parsed into a category, functor or transformation."""

    def __init__(self, message: str, path: Optional[str] = None, field: Optional[str] = None):
        where = ""
        if path:
            where = f"{path}: "
        if field:
            where += f"[{field}] "
        super().__init__(f"{where}{message}")
        self.path = path
        self.field = field


class BudgetExceeded(EvrardError):
    """
    An enumeration grew past its configured budget.

    Attributes:
        what: Name of the enumeration that was running
        used: Number of items enumerated when the limit was hit
        limit: The configured limit
    """

    def __init__(self, what: str, used: int, limit: int):
        super().__init__(f"budget exceeded while enumerating {what}: {used} > {limit}")
        self.what = what
        self.used = used
        self.limit = limit


class PreconditionError(EvrardError):
    """A hypothesis required by a check or construction does not hold."""


class TruncationError(PreconditionError):
    """The requested answer needs more data than a finite stage provides."""
