"""Exception hierarchy shared by all qlie modules."""


class QLieError(Exception):
    """Base class for errors raised by qlie."""


class DivisionByZero(QLieError, ZeroDivisionError):
    pass


class PoleError(QLieError, ZeroDivisionError):
    """A scalar has a pole at q = 1 (equivalently h = 0)."""


class TwistError(QLieError, ValueError):
    pass


class ClosureError(QLieError):
    """An element does not lie in the span of an embedding.

    The residual left after projecting onto the span is kept on the
    exception, since it is the certificate of the failure.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class DimensionError(QLieError, ValueError):
    pass


class ParseError(QLieError, ValueError):
    """Syntax or mode error in an expression, with the byte offset."""

    def __init__(self, message, offset=0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
