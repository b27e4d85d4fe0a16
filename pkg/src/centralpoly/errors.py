"""Exception types shared across the package."""


class CentralPolyError(Exception):
    """Base class for all library errors."""


class CharacteristicMismatch(CentralPolyError, ValueError):
    pass


class DivisionByZero(CentralPolyError, ZeroDivisionError):
    pass


class NotInvertible(CentralPolyError, ArithmeticError):
    pass


class UnitInNonunitary(CentralPolyError, ValueError):
    """The unit (empty word / empty blade) was required in a nonunitary context."""


class TruncationMismatch(CentralPolyError, ValueError):
    pass


class ZeroPolynomial(CentralPolyError, ValueError):
    pass


class Incomparable(CentralPolyError, ValueError):
    pass


class NotInM(CentralPolyError, ValueError):
    pass


class NotInMPrime(CentralPolyError, ValueError):
    pass


class TypeMismatch(CentralPolyError, ValueError):
    pass


class ResourceLimit(CentralPolyError, RuntimeError):
    """A combinatorial budget was exceeded.

    ``reached`` records how far the computation got (e.g. the substitution
    cap or number of rows generated) so callers can report partial progress.
    """

    def __init__(self, message, reached=None):
        super().__init__(message)
        self.reached = reached


class ParseError(CentralPolyError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
