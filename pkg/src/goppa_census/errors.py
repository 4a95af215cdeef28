"""Exception types shared across the package."""


class NotPrime(ValueError):
    """Characteristic argument is not a prime number."""


class DegenerateDegree(ValueError):
    """Degree r < 3; projective linear sets need r >= 3."""


class DivisionByZero(ZeroDivisionError):
    """Field inversion of the zero element."""


class CapExceeded(RuntimeError):
    """Requested enumeration or materialization exceeds the configured cap."""


class CaseViolation(ValueError):
    """Arguments violate the divisibility preconditions of a counting case."""


class IntegralityViolation(ArithmeticError):
    """A division that must be exact left a remainder (case-ladder bug)."""
