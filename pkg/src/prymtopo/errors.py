"""Exception hierarchy shared across the package."""


class PrymTopoError(Exception):
    pass


class DomainError(PrymTopoError, ValueError):
    """An argument lies outside the domain of an arithmetic function."""


class NotADiscriminant(DomainError):
    pass


class SquareDiscriminant(DomainError):
    """Square discriminants are not handled by the Euler characteristic or cusp code."""


class NonIntegralGenus(PrymTopoError, ArithmeticError):
    """The orbifold Euler formula did not solve to a nonnegative integer."""


class InternalError(PrymTopoError, RuntimeError):
    pass


class DegenerateParameter(PrymTopoError, ValueError):
    """A polygon parameter gives a degenerate or self-intersecting polygon."""


class GluingError(PrymTopoError, ValueError):
    pass


class CorpusError(PrymTopoError, ValueError):
    """A corpus file could not be parsed."""
