from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Solution:
    """Objective value plus a witness.

    `assignment` holds a colouring or homomorphism map when one applies;
    `ordering` holds a d-coloring ordering for degeneracy problems.
    For decision problems `value` is a bool.
    """

    problem: str
    value: Any
    vertices: frozenset = frozenset()
    assignment: dict | None = None
    ordering: tuple | None = None
    extra: dict = field(default_factory=dict)
