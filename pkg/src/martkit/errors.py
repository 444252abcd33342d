"""Exception hierarchy shared by every martkit module."""


class MartkitError(Exception):
    """Base class for all errors raised by martkit."""


class DimensionError(MartkitError, ValueError):
    """Vectors or tables of incompatible dimension were combined."""


class UniverseMismatchError(MartkitError, ValueError):
    """Objects built over outcome sets of different sizes were combined."""


class HorizonMismatchError(MartkitError, ValueError):
    """A process and a filtration (or two processes) disagree on the horizon."""


class CapacityError(MartkitError):
    """An exhaustive event enumeration would exceed the configured cap."""


class PreconditionError(MartkitError, ValueError):
    """A documented precondition of an operation does not hold."""


class NotAdaptedError(PreconditionError):
    """A process is not adapted to the filtration it is checked against."""

    def __init__(self, time: int):
        super().__init__(f"process is not adapted: X_{time} is not F_{time}-measurable")
        self.time = time


class UnsupportedOrderError(MartkitError):
    """An order relation was requested on vectors of dimension greater than one."""
