"""Exception types raised by the solvers and the CLI."""


class CrabMeetError(Exception):
    """Base class for all package errors."""


class EmptyInput(CrabMeetError, ValueError):
    """No starting positions were supplied."""


class ParseError(CrabMeetError, ValueError):
    def __init__(self, token: str, position: int, reason: str = "malformed token"):
        self.token = token
        self.position = position
        super().__init__(f"{reason} at token {position}: {token!r}")


class NonIntegerInput(CrabMeetError, ValueError):
    """The linear-cost integer solver needs integral starting positions."""


class IndexOutOfRange(CrabMeetError, IndexError):
    pass


class RangeTooLarge(CrabMeetError, ValueError):
    """The exhaustive integer scan would exceed its candidate cap."""


class SolverDefect(CrabMeetError, RuntimeError):
    """A solver failed to find a point that convexity guarantees exists.

    Never expected in practice; raised instead of returning a bogus answer.
    """
