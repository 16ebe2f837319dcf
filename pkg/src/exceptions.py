"""
Exception hierarchy shared by every package under src
"""
from typing import Tuple


class BOrbitError(ValueError):
    """Base class for all library errors"""


class RankMismatchError(BOrbitError):
    """Two objects of different rank n were combined"""


class NotAnInvolutionError(BOrbitError):
    pass


class BoundExceededError(BOrbitError):
    """Enumeration requested beyond the configured max_n"""


class ElementNotInPosetError(BOrbitError):
    pass


class NonOrthogonalError(BOrbitError):
    pass


class UnsupportedRootSystemError(BOrbitError):
    """Only C_n (and A_{n-1} for the rank-order recap) have a support"""


class RingMismatchError(BOrbitError):
    pass


class LaurentRankError(BOrbitError):
    """Rank is only defined here for rational matrices"""


class NonInvertibleError(BOrbitError):
    pass


class NilpotencyError(BOrbitError):
    """e_alpha squared is not zero, so 1 + c*e_alpha is not exp(c*e_alpha)"""


class IndexOrderError(BOrbitError):
    pass


class ConfigError(BOrbitError):
    pass


class UnknownFormatError(BOrbitError):
    pass


class NegativeExponentError(BOrbitError):
    """A Laurent entry has no limit at s = 0"""

    def __init__(self, position: Tuple[int, int], exponent: int):
        self.position = position
        self.exponent = exponent
        super().__init__(f"Entry {position} has a term of degree {exponent}; no limit at 0")


class UsageError(BOrbitError):
    """Command-line arguments that do not fit together"""
