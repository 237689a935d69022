"""Exception hierarchy.

Two families matter for the CLI exit code: ``InputError`` (malformed or
inconsistent user input, exit 1) and ``RefusalError`` (the input is valid but
the computation is declined, e.g. an enumeration cap would be exceeded or a
certificate was demanded where none exists, exit 2).
"""


class PfgmError(Exception):
    """Base class for all package errors."""


class InputError(PfgmError):
    """Malformed or inconsistent input data."""


class InvalidGraphError(InputError):
    """Graph violates a structural invariant (loop, duplicate edge, ...)."""


class InvalidMultiplicityError(InputError):
    """Color multiplicities are negative or do not sum to the vertex count."""


class InvalidWeightsError(InputError):
    """Weight array is asymmetric, mis-sized, or has an inconsistent k."""


class InadmissiblePrefixError(InputError):
    """A restriction prefix repeats a vertex or over-uses a color."""


class RefusalError(PfgmError):
    """Valid input, but the computation is declined."""


class InstanceTooLargeError(RefusalError):
    """Brute-force enumeration would exceed the configured cap."""


class NoCertificateError(RefusalError):
    """No error certificate exists (zero-free radius does not exceed 1)."""


class WorkCapExceededError(RefusalError):
    """Requested expansion order exceeds the operation budget.

    ``achievable_order`` is the largest order that fits the budget.
    """

    def __init__(self, message: str, achievable_order: int):
        super().__init__(message)
        self.achievable_order = achievable_order
