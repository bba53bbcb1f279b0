"""Exception hierarchy.

Two families matter to callers: arithmetic failures (a formula did not
collapse the way it must, usually a transcription error) and check failures
(a computed Betti series violates a structural law such as positivity).
The CLI maps them to distinct exit codes.
"""


class HiggsIPError(Exception):
    """Base class for every error raised by this package."""


class UsageError(HiggsIPError, ValueError):
    pass


class InvalidGenus(UsageError):
    def __init__(self, g):
        super().__init__(f"genus must be an integer >= 2, got {g!r}")
        self.g = g


class UnknownQuantity(UsageError):
    def __init__(self, name, known=()):
        msg = f"unknown quantity {name!r}"
        if known:
            msg += f"; expected one of: {', '.join(known)}"
        super().__init__(msg)
        self.name = name


class ArithmeticFailure(HiggsIPError, ArithmeticError):
    pass


class NotDivisible(ArithmeticFailure):
    """Raised when an exact polynomial division leaves a remainder.

    ``remainder`` holds the nonzero remainder (or the partial remainder at the
    step where an integer quotient coefficient could not be formed).
    """

    def __init__(self, dividend, divisor, remainder):
        super().__init__(
            f"({dividend}) is not divisible by ({divisor}); remainder {remainder}"
        )
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder


class NonIntegerCoefficient(ArithmeticFailure):
    def __init__(self, degree, value, context=""):
        where = f" in {context}" if context else ""
        super().__init__(f"non-integer coefficient {value} at t^{degree}{where}")
        self.degree = degree
        self.value = value


class CheckFailure(HiggsIPError):
    pass


class NegativeCoefficient(CheckFailure):
    def __init__(self, degree, value, context=""):
        where = f" in {context}" if context else ""
        super().__init__(f"negative coefficient {value} at t^{degree}{where}")
        self.degree = degree
        self.value = value


class NegativeCokernel(CheckFailure):
    """Cokernel dimension came out negative: the Lefschetz map was not injective."""

    def __init__(self, degree, value):
        super().__init__(
            f"cokernel of the Lefschetz map has dimension {value} at t^{degree}"
        )
        self.degree = degree
        self.value = value


class DegreeMismatch(CheckFailure):
    def __init__(self, expected, found, context=""):
        where = f" in {context}" if context else ""
        super().__init__(f"expected degree {expected}, found {found}{where}")
        self.expected = expected
        self.found = found
