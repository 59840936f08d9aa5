# errors.py


class HomrepError(Exception):
    pass


class ContractViolation(HomrepError, ValueError):
    """A precondition of an operation was not met by its caller."""


class GraphParseError(ContractViolation):
    def __init__(self, message, line=None, token=None):
        self.line = line
        self.token = token
        where = f"line {line}: " if line is not None else ""
        near = f" (at {token!r})" if token is not None else ""
        super().__init__(f"{where}{message}{near}")


class NonNormalizableError(HomrepError):
    pass


class NotMultiplicativeError(HomrepError):
    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class NotReflectionPositiveError(HomrepError):
    def __init__(self, message, k=None, rows=None, verdict=None):
        self.k = k
        self.rows = rows
        self.verdict = verdict
        super().__init__(message)


class DegenerateSpectrumError(HomrepError):
    pass


class DegenerateIdempotentError(HomrepError):
    pass
