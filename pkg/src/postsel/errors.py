"""Exception hierarchy."""


class PostselError(Exception):
    """Base class for all errors raised by the package."""


class ComputeError(PostselError):
    """A numerical evaluation could not be completed (CLI exit code 2)."""


class TruncationOverflow(ComputeError):
    """The state carries non-negligible weight at the Fock cutoff."""


class DimensionMismatch(ComputeError):
    pass


class ZeroVector(ComputeError):
    pass


class DegenerateCat(ComputeError):
    pass


class DivergentWeakValue(ComputeError):
    pass


class VacuumUndefined(ComputeError):
    """g2 requested for a state with no photons."""


class InvariantViolation(ComputeError):
    def __init__(self, quantity, detail=""):
        self.quantity = quantity
        super().__init__(f"{quantity}: {detail}" if detail else quantity)


class ConfigParseError(PostselError):
    """Bad configuration input (CLI exit code 1)."""

    def __init__(self, message, field=None):
        self.field = field
        super().__init__(message)


class UnknownPreset(ConfigParseError):
    pass
