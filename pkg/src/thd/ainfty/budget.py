"""Evaluation budget guarding exhaustive basis-tuple enumerations."""

from __future__ import annotations

import os

from ..errors import BudgetExceeded

DEFAULT_BUDGET = 10_000_000
ENV_VAR = "THD_BUDGET"


def resolve_budget(explicit=None) -> int:
    """Explicit value, else the THD_BUDGET environment variable, else default."""
    if explicit is not None:
        return int(explicit)
    env = os.environ.get(ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_BUDGET


class Budget:
    """A consumable counter of basis-tuple evaluations."""

    def __init__(self, limit=None):
        self.limit = resolve_budget(limit)
        self.spent = 0

    def charge(self, amount: int = 1) -> None:
        self.spent += amount
        if self.spent > self.limit:
            raise BudgetExceeded(
                f"evaluation budget exhausted ({self.spent} > {self.limit}); "
                f"raise it via --budget or {ENV_VAR}"
            )
