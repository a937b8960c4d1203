"""Exception types shared across the package."""


class HahnFirError(Exception):
    """Base class for all errors raised by hahnfir."""


class SingularLowerParameter(HahnFirError):
    """A lower-parameter Pochhammer symbol vanished inside the summation range."""

    def __init__(self, index, parameter, message=None):
        self.index = index
        self.parameter = parameter
        super().__init__(
            message
            or f"lower parameter {parameter} gives a zero Pochhammer symbol at term {index}"
        )


class InvalidForm(HahnFirError):
    pass


class OrderTooLarge(HahnFirError):
    """Polynomial order does not fit the window (needs m + 1 <= N)."""


class OutOfSupport(HahnFirError):
    pass


class ZeroArgument(HahnFirError):
    pass


class NearSingular(HahnFirError):
    """Closed form evaluated too close to its removable pole at z = 1."""


class WindowOutOfRange(HahnFirError):
    pass


class OrderExceedsWindow(HahnFirError):
    pass


class SignalTooShort(HahnFirError):
    pass
