# -*- coding: utf-8 -*-
"""
Initial and terminal objects
============================

Exhaustive search with a hom-set size certificate.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional

from evrard.categories.category import FiniteCategory


@dataclass
class UniversalObject:
    """
    Result of an initial/terminal search.

    Attributes:
        kind: "initial" or "terminal"
        obj: The object found, or None
        certificate: For the object found, hom-set sizes to (initial) or from
            (terminal) every object; all equal to 1
    """
    kind: str
    obj: Optional[str]
    certificate: Dict[str, int] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.obj is not None


def _search(C: FiniteCategory, kind: str) -> UniversalObject:
    for candidate in C.objects:
        sizes = {}
        for x in C.objects:
            size = len(C.hom(candidate, x) if kind == "initial" else C.hom(x, candidate))
            sizes[x] = size
            if size != 1:
                break
        else:
            return UniversalObject(kind, candidate, sizes)
    return UniversalObject(kind, None)


def find_initial(C: FiniteCategory) -> UniversalObject:
    """Return an object with exactly one morphism to every object, if any."""
    return _search(C, "initial")


def find_terminal(C: FiniteCategory) -> UniversalObject:
    """Return an object with exactly one morphism from every object, if any."""
    return _search(C, "terminal")
