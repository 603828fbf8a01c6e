"""Exception hierarchy shared by every module."""


class OrdRootError(Exception):
    """Base class for all errors raised by this package."""


class InvalidModulus(OrdRootError, ValueError):
    pass


class UndefinedGcd(OrdRootError, ValueError):
    pass


class EmptyInput(OrdRootError, ValueError):
    pass


class NotAUnit(OrdRootError, ValueError):
    """The element is congruent to 0 and has no multiplicative order."""


class ValidationError(OrdRootError, ValueError):
    """A GroupSpec or Factorization invariant does not hold.

    ``kind`` is a stable machine-readable tag naming the failed invariant.
    """

    kind = "invalid-spec"

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.kind}: {msg}" if msg else self.kind


class ProductMismatch(ValidationError):
    kind = "product-mismatch"


class CompositeFactor(ValidationError):
    kind = "composite-factor"


class CompositeModulus(ValidationError):
    kind = "composite-modulus"


class UnsortedFactors(ValidationError):
    kind = "unsorted-or-duplicate-primes"


class BadExponent(ValidationError):
    kind = "bad-exponent"


class TriesExhausted(OrdRootError, RuntimeError):
    pass


class TooSmall(OrdRootError, ValueError):
    pass


class IncompatibleK(OrdRootError, ValueError):
    pass


class AboveLimit(OrdRootError, ValueError):
    pass
