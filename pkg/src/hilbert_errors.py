#!/usr/bin/env python3
"""
Hilbert Errors

Exception hierarchy shared by every package. The CLI maps these classes to
process exit codes.
"""

from typing import Optional


class HilbertError(Exception):
    """Base class for all library errors"""


class InvalidInputError(HilbertError, ValueError):
    """A precondition of an operation was violated"""


class NotSymmetricError(HilbertError, ValueError):
    """Schur-basis extraction met a non-symmetric polynomial"""

    def __init__(self, exponent=None):
        self.exponent = exponent
        detail = f" (leading exponent {tuple(exponent)})" if exponent is not None else ""
        super().__init__(f"input not symmetric{detail}")


class UnsupportedGroupError(HilbertError, ValueError):
    """The requested operation is not defined for this group"""


class InternalInconsistencyError(HilbertError, RuntimeError):
    """Two computations that must agree did not"""


class SpecParseError(InvalidInputError):
    """Module specification text could not be parsed"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
