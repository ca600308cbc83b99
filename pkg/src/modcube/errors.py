"""Exception hierarchy shared by all modcube modules."""


class ModcubeError(Exception):
    """Base class for all errors raised by modcube."""


class FieldMismatch(ModcubeError):
    """Operands live over different base fields."""


class UnitRequired(ModcubeError):
    """Division or normalization needs a unit (x-adic valuation zero)."""


class BadIndex(ModcubeError):
    """Cube-direction index out of range."""


class ZeroFunction(ModcubeError):
    """The zero function has no divisor or valuation data."""


class NoBasePoint(ModcubeError):
    """No degree-1 base point available off the modulus."""


class NotAdmissible(ModcubeError):
    """Polynomial violates the coefficient-valuation condition."""


class NotInG(ModcubeError):
    """Rational function is not congruent to 1 along the modulus divisor."""


class PreconditionFailed(ModcubeError):
    """Caller violated a documented precondition."""


class InternalInvariantViolation(ModcubeError):
    """A theorem-backed invariant failed; this signals a bug in modcube."""


class ResourceBound(ModcubeError):
    """Requested enumeration exceeds the configured desk-scale bounds."""


class ParseError(ModcubeError):
    """Expression could not be parsed.

    Carries the offending position so the CLI can report line/column.
    """

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (column {position + 1})")
        self.position = position
