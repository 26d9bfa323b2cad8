"""Exception hierarchy.

Three families, matching the CLI exit codes: bad input (1), unmet
preconditions (2), and failed theorem checks (3).
"""

from __future__ import annotations


class SemigroupError(Exception):
    exit_code = 1


class ValidationError(SemigroupError):
    """Malformed or out-of-contract input."""


class NonSquareTable(ValidationError):
    pass


class EntryOutOfRange(ValidationError):
    pass


class NotAssociative(ValidationError):
    def __init__(self, triple: tuple[int, int, int]):
        a, b, c = triple
        super().__init__(f"(ab)c != a(bc) for a={a}, b={b}, c={c}")
        self.triple = triple


class DuplicateLabels(ValidationError):
    pass


class ParentMismatch(ValidationError):
    pass


class EmptyGenerator(ValidationError):
    pass


class EmptySubset(ValidationError):
    pass


class ElementOutOfRange(ValidationError):
    pass


class NotASubsemigroup(ValidationError):
    pass


class NotACongruence(ValidationError):
    pass


class OrderBoundExceeded(ValidationError):
    pass


class ZeroSize(ValidationError):
    pass


class NotAGroup(ValidationError):
    pass


class InvalidParams(ValidationError):
    pass


class UnknownSubset(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class SeriesError(ValidationError):
    """A chain that is not a normal series."""


class NotDescending(SeriesError):
    pass


class NotSubsemigroup(SeriesError):
    def __init__(self, index: int, witness=None):
        super().__init__(f"term {index} is not a subsemigroup (witness {witness})")
        self.index = index
        self.witness = witness


class NotReflexiveUnitaryInPredecessor(SeriesError):
    def __init__(self, index: int, flag: str, witness):
        super().__init__(f"term {index} is not {flag} in term {index - 1} (witness {witness})")
        self.index = index
        self.flag = flag
        self.witness = witness


class PreconditionViolated(SemigroupError):
    exit_code = 2


class NotLeftSimple(PreconditionViolated):
    pass


class HNotReflexiveUnitary(PreconditionViolated):
    pass


class NNotUnitary(PreconditionViolated):
    pass


class EmptyIntersection(PreconditionViolated):
    pass


class TheoremCheckFailed(SemigroupError):
    """A verified conclusion did not hold; carries the counterexample."""

    exit_code = 3

    def __init__(self, theorem: str, message: str, counterexample=None):
        super().__init__(f"{theorem}: {message}")
        self.theorem = theorem
        self.counterexample = counterexample


class ConstructionCheckFailed(TheoremCheckFailed):
    pass
