"""Exception hierarchy shared by the library and the CLI.

Each class carries the process exit code the CLI maps it to.
"""


class TepkitError(Exception):
    exit_code = 2
    code = "error"


class InputError(TepkitError, ValueError):
    """Malformed input: wrong shape, non-finite entries, bad JSON."""

    code = "input"


class ShapeError(InputError):
    code = "shape"


class UsageError(TepkitError, ValueError):
    """Unknown identifiers or infeasible requests (e.g. rank > dims)."""

    code = "usage"


class DomainError(TepkitError):
    """Input is well formed but outside the domain of the operation."""

    exit_code = 3
    code = "domain"

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = dict(residuals or {})


class PreconditionError(DomainError):
    code = "precondition"


class NumericalError(TepkitError):
    exit_code = 3
    code = "numerical"

    def __init__(self, message, iterations=None):
        super().__init__(message)
        self.iterations = iterations
