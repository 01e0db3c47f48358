from typing import List, Optional


class Type2Error(Exception):
    pass


class StructuralError(Type2Error, ValueError):
    pass


class BudgetExceededError(Type2Error):

    def __init__(self, message: str, limit: int):
        super().__init__(message)
        self.limit = limit


class PreconditionError(Type2Error, ValueError):
    pass


class DomainError(Type2Error, ValueError):
    pass


class ComponentParseError(Type2Error, ValueError):
    pass


class DataFormatError(Type2Error, ValueError):

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ClassificationViolationError(Type2Error):
    pass


class WrongComponentError(Type2Error):

    def __init__(self, message: str, weight4_count: int, expected: int):
        super().__init__(message)
        self.weight4_count = weight4_count
        self.expected = expected


class RecordValidationError(Type2Error):

    def __init__(self, record_index: int, violations: List[str]):
        joined = "; ".join(violations)
        super().__init__(f"record {record_index} failed validation: {joined}")
        self.record_index = record_index
        self.violations = violations


class VerificationError(Type2Error):
    pass
