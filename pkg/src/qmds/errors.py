"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CodeError(Exception):
    """Base class for all errors raised by qmds."""


class NotPrime(CodeError, ValueError):
    pass


class SizeExceeded(CodeError, ValueError):
    pass


class FieldMismatch(CodeError, TypeError):
    pass


class DivisionByZero(CodeError, ZeroDivisionError):
    pass


class NotCoprime(CodeError, ValueError):
    pass


class ZeroElement(CodeError, ValueError):
    pass


class NoSuchRoot(CodeError, ValueError):
    pass


class CharacteristicDividesLength(CodeError, ValueError):
    pass


class NotPrimitiveRoot(CodeError, ValueError):
    pass


class BadArithmeticDifference(CodeError, ValueError):
    pass


class LengthMismatch(CodeError, ValueError):
    pass


class OracleBoundExceeded(CodeError, RuntimeError):
    """An oracle refused to run because its cost estimate is over the bound."""

    def __init__(self, strategy: str, cost: int, bound: int):
        self.strategy = strategy
        self.cost = cost
        self.bound = bound
        super().__init__(f"{strategy} oracle cost {cost} exceeds bound {bound}")


class LNotInvertible(CodeError, ValueError):
    pass


class NotDualContaining(CodeError, ValueError):
    pass


class UnknownDistance(CodeError, ValueError):
    pass


class ZeroDimension(CodeError, ValueError):
    """CSS input would give a quantum code of dimension k <= 0."""


class InvalidRate(CodeError, ValueError):
    pass


class SearchExhausted(CodeError, RuntimeError):
    def __init__(self, message: str, last_d: int):
        self.last_d = last_d
        super().__init__(message)


class BrokenProvenance(CodeError, ValueError):
    pass
