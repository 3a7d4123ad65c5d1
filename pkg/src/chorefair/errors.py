"""Exception types shared across the package."""


class ChoreFairError(Exception):
    """Base class for all package-specific errors."""


class ParseError(ChoreFairError):
    """Malformed JSON input or a non-canonical rational string."""


class StructureError(ChoreFairError):
    """An allocation does not partition the instance's items."""


class NormalizationError(ChoreFairError):
    """An agent's total cost is zero, so her row cannot be scaled to 1."""


class NotNormalized(ChoreFairError):
    """An operation requiring row sums of exactly 1 got an unnormalized instance."""


class WrongAgentCount(ChoreFairError):
    """A two-agent operation was called with n != 2."""


class InvalidPermutation(ChoreFairError):
    """A round-robin order is not a permutation of the agents."""


class BudgetExceeded(ChoreFairError):
    """An exhaustive search would need more allocations than the budget allows."""

    def __init__(self, required, budget):
        super().__init__(f"search requires {required} allocations, budget is {budget}")
        self.required = required
        self.budget = budget


class NoFairAllocation(ChoreFairError):
    """No allocation satisfies the requested criterion (possible only for EQ/EF)."""


class ParameterError(ChoreFairError):
    """A generator precondition (parameter bound, parity, divisibility) is violated."""
