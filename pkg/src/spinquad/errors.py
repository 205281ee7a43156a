"""Exception hierarchy shared by the library and the command line."""


class SpinquadError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SpinquadError):
    """A presentation or fixture file could not be read."""


class DomainError(SpinquadError):
    """Input is well formed but violates a mathematical precondition."""


class SingularMatrix(DomainError):
    pass


class NotRationalHomologySphere(SingularMatrix):
    """The linking matrix has determinant zero, so H_1 is infinite."""


class DimensionMismatch(DomainError):
    pass


class InvalidChernVector(DomainError):
    pass


class InvalidCharge(DomainError):
    pass


class NotAlgebraicallySplit(DomainError):
    """A formula that needs a diagonal linking matrix got a non-diagonal one."""


class ConsistencyError(DomainError):
    """Generator values do not extend to a quadratic function on the group."""


class DegenerateFunction(DomainError):
    """Gauss sum modulus or phase reconstruction is outside tolerance."""


class NoMatch(DomainError):
    """No isometry exists between two linking pairings."""


class UnknownSpinc(DomainError):
    pass


class VerificationFailure(SpinquadError):
    """A checked identity does not hold on the supplied data."""


class IncompleteTable(DomainError):
    pass


class AxiomViolation(VerificationFailure):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class InconsistentFamily(VerificationFailure):
    def __init__(self, message, identity=None):
        super().__init__(message)
        self.identity = identity
