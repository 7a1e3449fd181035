"""Exception hierarchy shared by every quadrisig module."""


class QuadrisigError(ValueError):
    """Base class; every library error is also a ValueError."""


class ParameterError(QuadrisigError):
    pass


class NotInSupport(QuadrisigError):
    pass


class SizeGuardError(QuadrisigError):
    pass


class InsufficientPrimes(QuadrisigError):
    pass


class NonConstantResidue(ArithmeticError):
    """Cyclotomic reduction left t-dependence behind. Signals an arithmetic bug."""


class LemmaViolation(AssertionError):
    pass
