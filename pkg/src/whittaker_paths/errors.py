"""Exception types shared across the package."""


class WhittakerError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedType(WhittakerError, ValueError):
    pass


class DimensionMismatch(WhittakerError, ValueError):
    pass


class CapExceeded(WhittakerError, ValueError):
    pass


class SingularWeight(WhittakerError, ZeroDivisionError):
    """A vertex or edge weight vanished at a specialized highest weight.

    ``beta`` holds the offending lattice point so callers can perturb the
    specialization and retry.
    """

    def __init__(self, beta, message=None):
        self.beta = tuple(beta)
        super().__init__(message or f"vertex weight vanishes at beta={self.beta}")


class CriticalSingularity(SingularWeight):
    """Affine weight vanished on the diagonal beta = m*delta (critical level)."""

    def __init__(self, beta):
        super().__init__(
            beta,
            f"affine weight vanishes on the diagonal at beta={tuple(beta)}; "
            "the level is critical, use critical_solve instead",
        )


class SingularSpecialization(SingularWeight):
    pass
