# -*- coding: utf-8 -*-
"""
Base class for verification checks
"""

from abc import ABC, abstractmethod
from typing import Any, List, Optional

from evrard.budget import Budget, as_budget
from evrard.categories.category import Functor, require_valid, validate_functor


class BaseCheck(ABC):
    """
    Abstract base class for checks run against a functor.

    Every check inherits from this class and implements run().

    Attributes:
        name: Check name
        description: What the check certifies
        claims: Statements the check gives evidence for
    """

    name: str = "Base Check"
    description: str = "Abstract base class for checks"
    claims: List[str] = []

    def __init__(self, functor: Functor, max_dim: int = 1, budget: Optional[Budget] = None):
        """
        Initialize the check.

        Args:
            functor: The functor under test
            max_dim: Homology degree bound k
            budget: Enumeration budget (int, Budget or None for the default)
        """
        self.functor = functor
        self.max_dim = max_dim
        self.budget = as_budget(budget)
        self._validate_input()

    def _validate_input(self):
        """Validate that the functor is suitable for checking."""
        if self.max_dim < 0:
            raise ValueError(f"Degree bound must be ≥ 0, got {self.max_dim}")
        require_valid(validate_functor(self.functor), f"functor {self.functor.name}")

    @abstractmethod
    def run(self) -> Any:
        """
        Run the check.

        Returns:
            A report object with a ``passed`` attribute
        """

    @classmethod
    def info(cls) -> dict:
        """
        Get check information.

        Returns:
            Dictionary with check metadata
        """
        return {
            'name': cls.name,
            'description': cls.description,
            'claims': cls.claims
        }
