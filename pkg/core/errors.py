#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Error hierarchy shared by every package
"""

from typing import Optional


class RevSynthError(ValueError):
    """Base class for all toolkit errors"""


class StructuralError(RevSynthError):
    """Invalid gate or circuit structure (line index, target among controls, width)"""


class CapacityError(RevSynthError):
    """Not enough room: dense limit exceeded, too few free or ancilla lines"""


class ParityError(RevSynthError):
    """Odd permutation requested where only even ones can be realized"""


class BasisError(RevSynthError):
    """The requested gate basis cannot express the construction"""


class ParameterError(RevSynthError):
    """Algorithm parameters outside their admissible range"""


class DomainError(RevSynthError):
    """Argument outside the domain of a field or class operation"""


class VerificationError(RevSynthError):
    """A circuit does not realize the mapping it was claimed to realize"""


class FormatError(RevSynthError):
    """Malformed input file"""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
