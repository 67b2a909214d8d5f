"""Exception hierarchy.

Input/validation problems derive from :class:`InputError` (a ``ValueError``);
failures of the numerics themselves derive from :class:`NumericalError`.
The CLI maps the two families to distinct exit codes.
"""


class QQBoundError(Exception):
    pass


class InputError(QQBoundError, ValueError):
    pass


class NumericalError(QQBoundError, ArithmeticError):
    pass


class DimensionMismatch(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class NotHermitian(InputError):
    pass


class InvalidPair(InputError):
    pass


class InvalidDensityMatrix(InputError):
    pass


class NotSorted(InputError):
    pass


class NotXForm(InputError):
    pass


class OutOfRange(InputError):
    pass


class UnsupportedTauConvention(InputError):
    pass


class NotPositiveSemidefinite(NumericalError):
    pass


class NoConvergence(NumericalError):
    pass
