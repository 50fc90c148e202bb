"""Exception hierarchy.

Every domain error carries a short machine-readable ``code`` which the CLI
copies into its error document.
"""


class DomainError(Exception):
    code = "DomainError"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness

    def to_json(self):
        doc = {"code": self.code, "message": str(self)}
        if self.witness is not None:
            doc["witness"] = self.witness
        return doc


class DimensionMismatch(DomainError, ValueError):
    code = "DimensionMismatch"


class EmptyGenerators(DomainError, ValueError):
    code = "EmptyGenerators"


class NotPointed(DomainError, ValueError):
    code = "NotPointed"


class NotFullDimensional(DomainError, ValueError):
    code = "NotFullDimensional"


class NotEffective(DomainError, ValueError):
    code = "NotEffective"


class MissingComaximalData(DomainError, ValueError):
    code = "MissingComaximalData"


class FormatViolation(DomainError, ValueError):
    code = "FormatViolation"


class ImmediateContradiction(DomainError):
    code = "ImmediateContradiction"


class Contradiction(DomainError):
    """Raised by the bounds engine; ``rule`` names the rule that emptied an interval."""

    code = "Contradiction"

    def __init__(self, message, rule=None, invariant=None, lo=None, hi=None, trace=None):
        witness = None
        if rule is not None:
            witness = {"rule": rule, "invariant": invariant, "lo": lo, "hi": hi}
        super().__init__(message, witness)
        self.rule = rule
        self.invariant = invariant
        self.lo = lo
        self.hi = hi
        self.trace = trace or []


class InternalInconsistency(AssertionError):
    """An internal cross-check failed. This is a bug, not bad input."""

    code = "InternalInconsistency"
