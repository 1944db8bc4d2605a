"""Exception hierarchy shared by every module."""


class WeylEulerianError(Exception):
    """Base class for all library errors."""


class InvalidWindowError(WeylEulerianError, ValueError):
    pass


class StatisticNotApplicableError(WeylEulerianError, ValueError):
    pass


class MembershipError(WeylEulerianError, ValueError):
    pass


class ResourceLimitError(WeylEulerianError):
    """Requested degree exceeds a configured enumeration cap."""


class DegenerateDistributionError(WeylEulerianError, ValueError):
    pass


class InconsistencyError(WeylEulerianError, ArithmeticError):
    """An exact computation produced a value that a formula forbids.

    Raised e.g. when a half-sum has an odd or negative coefficient, which
    would mean a closed form was transcribed incorrectly.
    """
