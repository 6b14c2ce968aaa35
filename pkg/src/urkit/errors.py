"""Exception hierarchy shared by all urkit modules."""


class UrkitError(Exception):
    """Base class for every error raised by urkit."""


class VarianceMismatch(UrkitError):
    pass


class NonUnimodular(UrkitError):
    pass


class DegenerateDyad(UrkitError):
    pass


class NoConvergence(UrkitError):
    pass


class NotClosed(UrkitError):
    pass


class GridTooSmall(UrkitError):
    pass


class ZeroSpinor(UrkitError):
    pass


class NotNull(UrkitError):
    pass


class NotSymmetric(UrkitError):
    pass


class NonPositiveInput(UrkitError, ValueError):
    pass


class NegativeArea(UrkitError, ValueError):
    pass


class NegativeMass(UrkitError, ValueError):
    pass


class ParameterError(UrkitError, ValueError):
    """Malformed or invalid cosmology parameter file."""
