"""Exception types shared across the package."""


class ConstraintViolation(ValueError):
    """A parameter combination lies outside the admissible domain.

    ``bound`` carries the admissible limit for the offending quantity when
    one exists (e.g. the largest allowed |alpha|^2 for a given order).
    """

    def __init__(self, message: str, bound: float | None = None):
        super().__init__(message)
        self.bound = bound


class AllZeroIntensity(ValueError):
    """An intensity profile carries no power."""


class IngestionError(ValueError):
    """A profile file could not be parsed into a valid sampled profile."""
