"""Exception types raised across the package."""


class SemigroupError(ValueError):
    """Base class for invalid inputs to semigroup operations."""


class EmptyInput(SemigroupError):
    pass


class GcdNotOne(SemigroupError):
    pass


class NotASemigroup(SemigroupError):
    """A gap set whose complement is not closed under addition."""


class NotMinimalGenerator(SemigroupError):
    pass


class NoFrobenius(SemigroupError):
    """Raised for the full monoid of nonnegative integers, which has no gaps."""


class ElementOutOfRange(SemigroupError):
    pass


class ConcentrationTooHigh(SemigroupError):
    pass


class ConcentrationNotTwo(SemigroupError):
    pass


class NotElementary(SemigroupError):
    pass


class InvalidGenusRange(SemigroupError):
    pass


class UnboundedEnumeration(SemigroupError):
    pass


class EvenMultiplicityInfinite(SemigroupError):
    """C2[m] is infinite for even m, so exhaustive counts never terminate."""


class Irreducible(SemigroupError):
    pass


class NotIrreducible(SemigroupError):
    pass


class BoundTooLarge(SemigroupError):
    pass


class ClassTreeInconsistency(RuntimeError):
    """A generated class-tree son failed re-validation."""
