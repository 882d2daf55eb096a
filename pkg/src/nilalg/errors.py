"""Exception types shared across the package."""


class NilalgError(Exception):
    """Base class for all package errors."""


class InvalidInputError(NilalgError):
    """Malformed input: dimension mismatch, bad parameters, bad JSON."""


class NotNilpotentError(NilalgError):
    """The lower central series (or an operator power chain) does not reach zero."""


class DegenerateSampleError(NilalgError):
    """Every drawn generator sample produced a singular change of basis."""
