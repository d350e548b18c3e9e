"""Exception types shared across the package."""


class FresError(Exception):
    pass


class CompositeNotZero(FresError):
    """Two maps claimed to form a complex do not compose to zero."""


class ParameterNotInvertible(FresError):
    """A leading coefficient is a non-unit polynomial in the formal parameter."""


class NotInKernel(FresError):
    """The contracting homotopy was applied outside the kernel of the boundary."""


class CapExceeded(FresError):
    """The deformation induction needed data above the configured caps."""


class SaturationError(FresError):
    """A computation required a Groebner basis that did not saturate within caps."""


class BadLabels(FresError):
    """Leaf labels of a tree are not a permutation of 1..n."""


class ArityMismatch(FresError):
    pass


class ShapeMismatch(FresError):
    """Substitution target does not match the rule's leading monomial."""


class ParseError(FresError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class MismatchReport(FresError):
    """A crosscheck failed; carries the offending bidegrees."""

    def __init__(self, message, mismatches):
        self.mismatches = list(mismatches)
        super().__init__(f"{message}: {self.mismatches}")
