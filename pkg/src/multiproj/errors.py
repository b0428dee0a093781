"""Exception hierarchy shared by all modules."""


class MultiprojError(Exception):
    """Base class for every error raised by this package."""


class ArithmeticOverflowError(MultiprojError, ArithmeticError):
    """An intermediate integer exceeded the configured magnitude guard."""


class SpecError(MultiprojError, ValueError):
    """A ring-spec document could not be turned into a valid RingSpec."""


class MalformedSpecError(SpecError):
    pass


class DimensionMismatchError(SpecError):
    pass


class DuplicateVariableError(SpecError):
    pass


class TorsionOrderError(SpecError):
    pass


class ResourceLimitError(MultiprojError):
    """An enumeration would exceed its configured ceiling."""


class IrrelevantSupportError(MultiprojError, ValueError):
    """A chart was requested for a support that is not relevant."""


class TorsionUnsupportedError(MultiprojError, ValueError):
    """The operation is only defined for torsion-free gradings."""


class InternalInconsistencyError(MultiprojError, RuntimeError):
    """Two independent criteria produced contradictory verdicts."""
