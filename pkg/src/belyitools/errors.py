"""Exception types shared across the package."""


class BelyiToolsError(Exception):
    pass


class NonSimpleRoot(BelyiToolsError):
    """Raised when Hensel lifting is asked to start from a multiple root mod p."""


class ZeroPolynomial(BelyiToolsError):
    pass


class NotSquarefree(BelyiToolsError):
    pass


class CurveMismatch(BelyiToolsError):
    pass


class NotOnCurve(BelyiToolsError):
    pass


class SingularCurve(BelyiToolsError):
    pass


class InvalidKernel(BelyiToolsError):
    pass


class SampleFailure(BelyiToolsError):
    def __init__(self, message, prime=None, point=None):
        super().__init__(message)
        self.prime = prime
        self.point = point


class BadInput(BelyiToolsError):
    pass


class SizeCapExceeded(BelyiToolsError):
    pass


class NotASubgroup(BelyiToolsError):
    pass


class NotAGroup(BelyiToolsError):
    pass


class InvalidModule(BelyiToolsError):
    pass


class NotExact(BelyiToolsError):
    pass


class NotTransitive(BelyiToolsError):
    pass
