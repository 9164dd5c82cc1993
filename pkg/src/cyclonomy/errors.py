"""Exception types. Each carries a stable ``code`` (its class name) for the CLI."""


class CyclonomyError(Exception):
    """Base class for all domain errors raised by the package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class NotAnOddPrime(CyclonomyError, ValueError):
    pass


class NotPrime(CyclonomyError, ValueError):
    pass


class ContextMismatch(CyclonomyError, ValueError):
    pass


class NotCoprime(CyclonomyError, ValueError):
    pass


class InternalInconsistency(CyclonomyError, ArithmeticError):
    """An identity that must hold mathematically failed; indicates a bug."""


class ZeroInput(CyclonomyError, ValueError):
    pass


class ZeroDivisor(CyclonomyError, ZeroDivisionError):
    pass


class NotDivisible(CyclonomyError, ArithmeticError):
    pass


class NotAUnit(CyclonomyError, ValueError):
    def __init__(self, norm):
        super().__init__(f"element has norm {norm}, not 1")
        self.norm = norm


class MinusSignCase(CyclonomyError, ArithmeticError):
    pass


class NoTorsionMatch(CyclonomyError, ArithmeticError):
    pass


class HypothesisFailed(CyclonomyError, ValueError):
    pass


class OutOfRange(CyclonomyError, ValueError):
    pass


class ZeroIdeal(CyclonomyError, ValueError):
    pass


class UnsupportedPrime(CyclonomyError, ValueError):
    pass


class CertificationFailed(CyclonomyError, RuntimeError):
    pass


class OddIndex(CyclonomyError, ValueError):
    pass


class NonUniqueZero(CyclonomyError, ArithmeticError):
    pass


class NormNotOne(CyclonomyError, ValueError):
    def __init__(self, norm):
        super().__init__(f"norm is {norm}, expected 1")
        self.norm = norm


class ExhaustedBasis(CyclonomyError, ArithmeticError):
    pass


class NotIntegralEta(CyclonomyError, ValueError):
    pass


class ElementFormatError(CyclonomyError, ValueError):
    pass
