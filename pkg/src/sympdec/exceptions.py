from __future__ import annotations


class SympdecError(Exception):
    pass


class InvalidArgumentError(SympdecError, ValueError):
    pass


class IntegralityError(SympdecError, ArithmeticError):
    """A multiplicity or character came out fractional or negative.

    Characters and multiplicities here are integers by theory, so this always
    points at a corrupted class function or a bug, never at rounding.
    """


class ResourceLimitError(SympdecError):
    """A configured size cap of the brute force oracle would be exceeded."""

    def __init__(self, what: str, size: int, limit: int, key: str):
        self.what = what
        self.size = size
        self.limit = limit
        self.key = key
        super().__init__(
            f'{what} needs {size:,} entries, which exceeds the configured cap of '
            f'{limit:,}. Raise `{key}` in settings.yaml if you have the memory for it.'
        )


class VerificationError(SympdecError):
    pass


exception_list = {
    'SympdecError': SympdecError,
    'InvalidArgumentError': InvalidArgumentError,
    'IntegralityError': IntegralityError,
    'ResourceLimitError': ResourceLimitError,
    'VerificationError': VerificationError,
}
