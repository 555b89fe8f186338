"""Exception hierarchy.

Everything raised on purpose derives from :class:`FTRiskError`.  The two
families map onto CLI exit codes: :class:`InputError` (1) and
:class:`NumericalError` (2).
"""


class FTRiskError(Exception):
    pass


class InputError(FTRiskError, ValueError):
    pass


class NumericalError(FTRiskError, ArithmeticError):
    pass


# input problems

class NonFinitePoint(InputError):
    pass


class DuplicateVertices(InputError):
    pass


class SeriesTooShort(InputError):
    pass


class NonMonotonicTime(InputError):
    pass


class EmptySeries(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, row=None, column=None):
        super().__init__(message)
        self.row = row
        self.column = column


class DataFileNotFound(InputError, FileNotFoundError):
    pass


class IoError(InputError, OSError):
    pass


class InsufficientData(InputError):
    pass


class LengthMismatch(InputError):
    pass


class EmptyInput(InputError):
    pass


# numerical problems

class DegenerateTriangle(NumericalError):
    pass


class PreconditionViolated(NumericalError):
    pass


class NoConvergence(NumericalError):
    pass


class SolverDisagreement(NumericalError):
    pass


class ZeroMean(NumericalError):
    pass


class ZeroMPhi(NumericalError):
    pass


class NonRealResult(NumericalError):
    pass
