"""Exception hierarchy shared across the package."""


class HmmensError(Exception):
    """Base class for all package errors."""


class InputError(HmmensError, ValueError):
    """A caller-supplied argument violates a documented precondition."""


class DegenerateInputError(InputError):
    """Input is structurally valid but too small/degenerate to process."""


class FormatError(HmmensError, ValueError):
    """A serialized payload is malformed or violates model invariants."""


class InternalError(HmmensError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
