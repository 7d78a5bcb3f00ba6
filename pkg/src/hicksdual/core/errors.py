# Description: Exception hierarchy for the library and the CLI.
"""Domain errors.

All errors derive from ``HicksDualError`` and from ``ValueError``; the CLI turns any of them
into exit code 2.
"""

from __future__ import annotations


class HicksDualError(Exception):
    """Root of every error raised by hicksdual."""


class InvalidValuation(HicksDualError, ValueError):
    pass


class InfeasibleConsumption(HicksDualError, ValueError):
    """Money at or below the agent's money floor."""


class InfeasibleBundle(HicksDualError, ValueError):
    """Goods bundle outside the agent's feasible set."""


class LevelOutOfRange(HicksDualError, ValueError):
    pass


class NoEndowmentAllocation(HicksDualError, ValueError):
    """The total endowment is not a sum of feasible bundles."""


class EmptyFeasibleSet(HicksDualError, ValueError):
    pass


class DimensionMismatch(HicksDualError, ValueError):
    pass


class NotStrictlyDecreasing(HicksDualError, ValueError):
    pass


class MismatchedDomains(HicksDualError, ValueError):
    pass


class NotUnitBounded(HicksDualError, ValueError):
    """Feasible set leaves {0,1}^I."""


class NegativeQuantities(HicksDualError, ValueError):
    pass


class IsActuallySubstitutes(HicksDualError, ValueError):
    pass


class SubsetUnimodular(HicksDualError, ValueError):
    pass


class NotParetoEfficient(HicksDualError, ValueError):
    pass


class EnumerationLimitExceeded(HicksDualError, ValueError):
    pass


class DocumentError(HicksDualError, ValueError):
    """Economy document failed to parse; ``path`` names the offending field."""

    def __init__(self, path: str, message: str) -> None:
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
        self.message = message
