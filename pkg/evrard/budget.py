# -*- coding: utf-8 -*-
"""
Enumeration budget
==================

Every exponential enumeration (zig-zags, zig-zag morphisms, Grothendieck
morphisms, nerve chains) charges a shared ``Budget``. The bookkeeping that
follows an enumeration (composition tables, face maps, elimination steps)
spends a second counter, the work limit, which defaults to
``WORK_FACTOR`` times the enumeration limit. Running out of either raises
``BudgetExceeded`` instead of hanging.
"""

from typing import Optional

from evrard.errors import BudgetExceeded

DEFAULT_BUDGET = 200_000
WORK_FACTOR = 100


class Budget:
    """
    Counter with a hard upper limit.

    Attributes:
        limit: Maximum number of enumerated items (None = unlimited)
        used: Items charged so far
        work_limit: Maximum number of work steps (None = unlimited)
        work_used: Work steps spent so far
    """

    def __init__(self, limit: Optional[int] = DEFAULT_BUDGET, work_limit: Optional[int] = None):
        if limit is not None and limit <= 0:
            raise ValueError(f"Budget must be positive, got {limit}")
        if work_limit is not None and work_limit <= 0:
            raise ValueError(f"Work limit must be positive, got {work_limit}")
        self.limit = limit
        self.used = 0
        if work_limit is None and limit is not None:
            work_limit = limit * WORK_FACTOR
        self.work_limit = work_limit
        self.work_used = 0

    def charge(self, count: int, what: str) -> None:
        """
        Spend ``count`` items on enumeration ``what``.

        Raises:
            BudgetExceeded: If the running total passes the limit
        """
        self.used += count
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(what, self.used, self.limit)

    def spend(self, count: int, what: str) -> None:
        """
        Spend ``count`` work steps on ``what``.

        Raises:
            BudgetExceeded: If the running work total passes the work limit
        """
        self.work_used += count
        if self.work_limit is not None and self.work_used > self.work_limit:
            raise BudgetExceeded(what, self.work_used, self.work_limit)

    @property
    def remaining(self) -> Optional[int]:
        if self.limit is None:
            return None
        return max(self.limit - self.used, 0)

    def __repr__(self) -> str:
        return f"Budget(used={self.used}, limit={self.limit}, work={self.work_used}/{self.work_limit})"


def as_budget(budget) -> Budget:
    """Accept a Budget, an int limit, or None (default limit)."""
    if isinstance(budget, Budget):
        return budget
    if budget is None:
        return Budget()
    return Budget(int(budget))
