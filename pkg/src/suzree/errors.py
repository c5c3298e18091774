"""Exception types raised by the library."""


class SuzReeError(Exception):
    """Base class for all library errors."""


class FieldMismatch(SuzReeError, ValueError):
    """Operands live in different fields."""


class ZeroInverse(SuzReeError, ZeroDivisionError):
    """Attempt to invert the zero field element."""


class ZeroInput(SuzReeError, ValueError):
    """An operation that requires a nonzero argument received zero."""


class WrongCharacteristic(SuzReeError, ValueError):
    pass


class NotIrreducible(SuzReeError, ValueError):
    pass


class Singular(SuzReeError, ZeroDivisionError):
    """Matrix is not invertible."""


class WrongDimension(SuzReeError, ValueError):
    pass


class ZeroTorusParameter(SuzReeError, ValueError):
    """Torus elements h(eps) need eps != 0."""


class NotInGroup(SuzReeError, ValueError):
    """Matrix fails the Bruhat membership test."""


class NotInU(NotInGroup):
    """Matrix is not an element of the unipotent subgroup U."""


class ParseError(SuzReeError, ValueError):
    pass
