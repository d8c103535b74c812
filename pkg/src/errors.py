"""
Exception hierarchy for the permutation-code toolkit
"""


class PermCodeError(Exception):
    """Base class for all toolkit errors"""


class DomainError(PermCodeError, ValueError):
    """An argument violates an operation's precondition"""


class CapacityError(PermCodeError, RuntimeError):
    """The request is valid but exceeds a configured engine limit"""


class OracleTooLarge(CapacityError):
    """Literal enumeration would exceed the enumeration budget"""
