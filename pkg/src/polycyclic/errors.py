"""Exception hierarchy.

Every error raised by the library derives from :class:`PolycyclicError`, so
callers (and the CLI) can report failures by class name.
"""


class PolycyclicError(Exception):
    """Base class for all library errors."""


class ParseError(PolycyclicError, ValueError):
    pass


class NotPrime(PolycyclicError, ValueError):
    pass


class ReducibleModulus(PolycyclicError, ValueError):
    pass


class NotLocal(PolycyclicError, ValueError):
    pass


class CtxMismatch(PolycyclicError, TypeError):
    pass


class NotAUnit(PolycyclicError, ArithmeticError):
    pass


class IncompatibleRings(PolycyclicError, ValueError):
    pass


class TooLarge(PolycyclicError, ValueError):
    pass


class NonMonicDivisor(PolycyclicError, ArithmeticError):
    pass


class NotAField(PolycyclicError, ValueError):
    pass


class DegreeTooLarge(PolycyclicError, ValueError):
    pass


class ZeroConstantTerm(PolycyclicError, ValueError):
    pass


class InvalidRoots(PolycyclicError, ValueError):
    """Declared roots are not roots of the required multiplicity, or collide mod the maximal ideal."""


class NonUnitRoot(PolycyclicError, ValueError):
    pass


class NotInImage(PolycyclicError, ValueError):
    pass


class NonMonic(PolycyclicError, ValueError):
    pass


class SingularMatrix(PolycyclicError, ArithmeticError):
    pass


class SingularVandermonde(SingularMatrix):
    pass


class UnassignedRoot(PolycyclicError, ValueError):
    pass


class AmbiguousRoot(PolycyclicError, ValueError):
    pass


class NotPrimeCharacteristic(PolycyclicError, ValueError):
    pass


class MultiplicityMismatch(PolycyclicError, ValueError):
    pass


class NonUnitConstantTerm(PolycyclicError, ValueError):
    pass


class ZeroCode(PolycyclicError, ValueError):
    pass


class NotAnIdeal(PolycyclicError, ValueError):
    pass


class DimensionMismatch(PolycyclicError, ValueError):
    pass


class SingularA(SingularMatrix):
    pass


class NonUnitConstant(PolycyclicError, ValueError):
    pass
