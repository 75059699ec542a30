"""Exception hierarchy shared by every module."""


class AbelcatError(Exception):
    """Base class for errors raised by this package."""


class DomainMismatch(AbelcatError):
    """Morphisms are not composable or not parallel as required."""


class ShapeError(AbelcatError):
    """Ragged or incompatible matrix/block shapes."""


class RingMismatch(AbelcatError):
    pass


class WellDefinednessError(AbelcatError):
    """A matrix does not send relations of the domain into relations of the codomain."""

    def __init__(self, message: str, column: int | None = None):
        super().__init__(message)
        self.column = column


class NotInvertible(AbelcatError):
    pass


class EnumerationRefused(AbelcatError):
    """Element enumeration was requested for an infinite module."""


class CapExceeded(AbelcatError):
    """An enumeration would exceed the configured cardinality cap."""


class LiftFailed(AbelcatError):
    pass


class UnsupportedGenerator(AbelcatError):
    pass


class InvalidInput(AbelcatError):
    pass


class VerificationFailure(AbelcatError):
    """A constructed object failed its own defining checks (internal error)."""


class ParseError(AbelcatError):
    """Input document error, located by a JSON path such as ``$.morphisms.f``."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path
