"""Exception types raised by the sorting library."""


class ContractViolation(ValueError):
    """A precondition of a library operation does not hold.

    Raised for wrong fixed-median range sizes, ranks out of range, merge
    layouts that break their buffer requirements and invalid configurations.
    """


class AnalysisDomainError(ValueError):
    """An argument lies outside the domain of a bound formula."""
