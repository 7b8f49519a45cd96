class AdesingError(Exception):
    """Base class for computation errors reported to the user."""


class NotZeroDimensional(AdesingError):
    pass


class NonIsolatedSingularity(AdesingError):
    def __init__(self, message: str = "non-isolated singularity"):
        super().__init__(message)


class NoWeightSystem(AdesingError):
    def __init__(self, message: str = "no quasihomogeneous weight system"):
        super().__init__(message)


class NotSimple(AdesingError):
    pass


class CorankTooLarge(AdesingError):
    pass


class ClassificationFailure(AdesingError):
    """No table entry matched; unreachable for simple quasihomogeneous input."""


class LimitExceeded(AdesingError):
    pass


class Undecided(AdesingError):
    """A budgeted search ran out before reaching a certified answer."""
