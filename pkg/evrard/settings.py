# -*- coding: utf-8 -*-
"""
Run configuration
"""

from dataclasses import dataclass, field
from typing import List, Optional

from evrard.budget import DEFAULT_BUDGET
from evrard.paths.simplex import VARIANTS

COMMANDS = ("validate", "homology", "replace", "check-b", "adjoint", "corpus")
OUTPUTS = ("text", "json")


@dataclass
class RunConfig:
    """
    Settings of one CLI invocation.

    File values from ``evrard_config.json`` are loaded first; command-line
    flags override them.
    """
    command: str = "validate"
    inputs: List[str] = field(default_factory=list)
    max_stage: int = 2
    variant: str = "le"
    max_dim: int = 1
    budget: int = DEFAULT_BUDGET
    output: str = "text"
    seed: int = 0
    raw: bool = False
    dual: bool = False
    allow_loops: bool = False
    side: str = "right"
    excel: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command {self.command!r}; expected one of {', '.join(COMMANDS)}")
        if self.max_stage < 1:
            raise ValueError(f"max_stage must be ≥ 1, got {self.max_stage}")
        if self.max_dim < 0:
            raise ValueError(f"max_dim must be ≥ 0, got {self.max_dim}")
        if self.budget <= 0:
            raise ValueError(f"budget must be positive, got {self.budget}")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.output not in OUTPUTS:
            raise ValueError(f"output must be one of {OUTPUTS}, got {self.output!r}")
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
