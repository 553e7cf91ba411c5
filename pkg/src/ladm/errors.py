"""Exception hierarchy shared by the ladm package."""


class LadmError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LadmError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class CapabilityError(LadmError):
    """A nonlinearity was asked for a derivative order it does not support."""


class NotTabulatedError(LadmError, KeyError):
    """No tabulated approximant exists for the requested (method, beta) pair."""


class OracleError(LadmError, RuntimeError):
    """The reference integrator failed to produce a trajectory."""


class InsufficientHorizonError(OracleError):
    """The integration horizon was too short for the requested measurement."""
