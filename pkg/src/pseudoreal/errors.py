"""Exception types shared across the package."""


class PseudoRealError(Exception):
    """Base class for every error raised by this package."""

    kind = "error"


class FieldMismatch(PseudoRealError, ValueError):
    kind = "field-mismatch"


class NotASubfield(PseudoRealError, ValueError):
    kind = "not-a-subfield"


class DivisionByZero(PseudoRealError, ZeroDivisionError):
    kind = "division-by-zero"


class ParseError(PseudoRealError, ValueError):
    kind = "parse-error"


class OrderNotFound(PseudoRealError, ArithmeticError):
    kind = "order-not-found"


class NotFiniteOrder(PseudoRealError, ValueError):
    kind = "not-finite-order"


class IdentityElement(PseudoRealError, ValueError):
    kind = "identity-element"


class ClosureExceedsCap(PseudoRealError, RuntimeError):
    kind = "closure-exceeds-cap"


class NotSubgroupOfAmbient(PseudoRealError, ValueError):
    kind = "not-subgroup-of-ambient"


class CriterionFailed(PseudoRealError, ValueError):
    kind = "criterion-failed"


class DegenerateParams(PseudoRealError, ValueError):
    kind = "degenerate-params"


class BadParameters(PseudoRealError, ValueError):
    kind = "bad-parameters"


class NoGenerators(PseudoRealError, ValueError):
    kind = "no-generators"


class PreconditionFailed(PseudoRealError, ValueError):
    kind = "precondition-failed"


class ZeroLeadingCoefficient(PseudoRealError, ValueError):
    kind = "zero-leading-coefficient"
