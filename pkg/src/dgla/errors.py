"""Exception hierarchy shared by every layer."""


class CertificationError(Exception):
    """Base class for errors raised by the certification kernel."""


class ConstructionRejected(CertificationError, ValueError):
    """A constructor precondition failed; ``witness`` names the offending data."""

    def __init__(self, message: str, witness: str = ""):
        super().__init__(f"{message} ({witness})" if witness else message)
        self.witness = witness


class DegreeError(CertificationError, ValueError):
    """An element or operator does not have the degree the operation needs."""


class NonAcyclicQuotient(CertificationError, ValueError):
    """The quotient of a short exact sequence has cohomology."""

    def __init__(self, message: str, degree: int, witness: str):
        super().__init__(f"{message}: H^{degree} contains {witness}")
        self.degree = degree
        self.witness = witness


class InternalConsistencyError(CertificationError, AssertionError):
    """An identity that must hold by construction failed."""


class TaskFileError(CertificationError, ValueError):
    """Schema or name-resolution problem in a task file; ``location`` is a dotted path."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
