"""Exception types raised across the package."""


class ConceptIRError(Exception):
    """Base class for every data error the package raises."""


class ParseError(ConceptIRError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateDocId(ConceptIRError):
    pass


class EmptyCollection(ConceptIRError):
    pass


class DanglingReference(ParseError):
    pass


class VersionMismatch(ConceptIRError):
    pass


class InfeasibleSpec(ConceptIRError):
    pass


class EmptyQuery(ConceptIRError):
    pass


class DivisionByZeroDf(ConceptIRError, ZeroDivisionError):
    pass


class InvariantViolation(ConceptIRError, ValueError):
    pass


class EmptyRetrieved(ConceptIRError):
    pass


class EmptyRelevant(ConceptIRError):
    pass


class MissingQrel(ConceptIRError):
    pass


class EmptyReport(ConceptIRError):
    pass
