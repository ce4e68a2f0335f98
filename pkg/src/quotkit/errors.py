"""Exception hierarchy.

Each class carries the process exit code the command-line front end reports
for it.
"""


class QuotkitError(Exception):
    exit_code = 1


class ParseError(QuotkitError):
    exit_code = 2

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class PreconditionError(QuotkitError):
    exit_code = 3


class RankDeficient(PreconditionError):
    pass


class OutsideOverlap(PreconditionError):
    pass


class DegreeTooHigh(PreconditionError):
    pass


class RegularityTooLow(PreconditionError):
    pass


class UnboundedRegularity(PreconditionError):
    """The sheaf is m-regular for every m (zero sheaf or finite support)."""


class ResourceCapError(QuotkitError):
    exit_code = 4


class StabilizationFailure(ResourceCapError):
    pass


class RefineCapExceeded(ResourceCapError):
    pass
