"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SubLcpError(Exception):
    """Base class for all library errors."""


# algebra
class InversionOfZero(SubLcpError, ZeroDivisionError):
    pass


class ContextMismatch(SubLcpError, ValueError):
    pass


class NotSquare(SubLcpError, ValueError):
    pass


class DivisionByZeroPolynomial(SubLcpError, ZeroDivisionError):
    pass


# subspaces and codes
class LengthMismatch(SubLcpError, ValueError):
    pass


class AmbientMismatch(SubLcpError, ValueError):
    pass


class EnumerationTooLarge(SubLcpError, ValueError):
    pass


class ZeroRank(SubLcpError, ValueError):
    pass


class NotADivisor(SubLcpError, ValueError):
    pass


class ZeroShift(SubLcpError, ValueError):
    pass


class TooFewMembers(SubLcpError, ValueError):
    pass


class DuplicateMember(SubLcpError, ValueError):
    pass


# lcp
class SizeMismatch(SubLcpError, ValueError):
    pass


class NotConstantDimension(SubLcpError, ValueError):
    pass


class NotLcp(SubLcpError, ValueError):
    pass


class StackedNotSquare(SubLcpError, ValueError):
    pass


# constructions
class NotLcpInput(SubLcpError, ValueError):
    pass


class ZeroLambda(SubLcpError, ValueError):
    pass


class DifferenceSingular(SubLcpError, ValueError):
    def __init__(self, i: int, j: int):
        super().__init__(f"M_{i} - M_{j} is singular")
        self.pair = (i, j)


class WrongCount(SubLcpError, ValueError):
    pass


class SplitOutOfRange(SubLcpError, ValueError):
    pass


# channel
class BadErrorDimension(SubLcpError, ValueError):
    pass


class ChannelModelError(SubLcpError, ValueError):
    """The received space cannot have come from a single insertion."""


class NoCodewordContained(ChannelModelError):
    pass


class MultipleCodewords(ChannelModelError):
    pass


# code files
class CodeFileError(SubLcpError, ValueError):
    """Parse failure carrying the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class BadFieldHeader(CodeFileError):
    pass


class CodeFileSyntaxError(CodeFileError):
    pass


class UndefinedName(CodeFileError):
    pass


class DimensionMismatch(CodeFileError):
    pass
