"""Exception types shared across the workbench."""


class WorkbenchError(Exception):
    """Base class for every error this package raises on purpose."""


class OrderOutOfRange(WorkbenchError):
    """Requested ring order is below 2 or above the configured cap."""


class NotPrime(WorkbenchError):
    pass


class NonPrimePowerGF(WorkbenchError):
    pass


class NonOrientableRelation(WorkbenchError):
    """A relation falls outside the orientable rewrite-rule fragment."""


class NonTerminating(WorkbenchError):
    """Completion produced an element count (or rule set) beyond the cap."""


class InconsistentPresentation(WorkbenchError):
    """The presented relations collapse the ring or break the ring axioms."""


class SpecSyntaxError(WorkbenchError):
    """Ring-spec text failed to parse; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnknownVariable(WorkbenchError):
    """A relation mentions a variable the quotient never declared."""


class EmptyGraphUndefined(WorkbenchError):
    """The ring has no zero divisors, so its zero-divisor graph is undefined."""


class TooLarge(WorkbenchError):
    """Input exceeds the size this exact routine is contracted for."""


class Disconnected(WorkbenchError):
    """Metric quantities are only defined on connected graphs."""


class UndefinedForEmptyGraph(WorkbenchError):
    pass


class Infeasible(WorkbenchError):
    """No candidate set can cover the constraint system."""


class MalformedGraphFile(WorkbenchError):
    pass
