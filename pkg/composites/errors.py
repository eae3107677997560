"""Error hierarchy shared by every module.

Each error records the operation that raised it and, when the failed
precondition comes from a stated result, the quote it was checked against.
"""


class CompositesError(Exception):
    def __init__(self, message, operation=None, citation=None):
        super().__init__(message)
        self.message = message
        self.operation = operation
        self.citation = citation

    def render(self) -> str:
        head = f"{self.operation}: {self.message}" if self.operation else self.message
        if self.citation:
            head += f' [cite: "{self.citation}"]'
        return head


# fieldtower
class InvalidField(CompositesError):
    pass


class IncompatibleFields(CompositesError):
    pass


class UnsupportedPredicate(CompositesError):
    pass


class NotAlgebraic(CompositesError):
    pass


# polyring
class DivisionByZeroPoly(CompositesError):
    pass


class UnsupportedFactorization(CompositesError):
    pass


class FieldMismatch(CompositesError):
    pass


# composite
class NotAMember(CompositesError):
    pass


class IsZeroOrUnit(CompositesError):
    pass


class SmallRingNotAField(CompositesError):
    pass


class SmallRingIsAField(CompositesError):
    pass


class NonunitRequired(SmallRingIsAField):
    pass


class NotInXB(CompositesError):
    pass


class SearchSpaceTooLarge(CompositesError):
    pass


class NotPurelyInseparablePair(CompositesError):
    pass


class ClassifierMismatch(CompositesError):
    pass


class InvalidArgument(CompositesError):
    pass


# ideals
class RingMismatch(CompositesError):
    pass


class WindowTooSmall(CompositesError):
    pass


class NotSupportedForProperPair(CompositesError):
    pass


class QuotientNotFinite(CompositesError):
    pass


# covers
class UnitOrZeroModulus(CompositesError):
    pass


class NotEmbedded(CompositesError):
    pass


# claims
class HypothesisMismatch(CompositesError):
    pass


# cli
class ParseError(CompositesError):
    def __init__(self, message, line, column, operation="parse_config"):
        super().__init__(f"{message} (line {line}, column {column})", operation=operation)
        self.line = line
        self.column = column
