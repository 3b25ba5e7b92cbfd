"""Exception hierarchy shared by all modules."""


class EdwardsCMError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(EdwardsCMError, ValueError):
    """Parameters outside the domain of an operation."""


class SingularCurveError(InvalidParameterError):
    pass


class NotOnCurveError(InvalidParameterError):
    pass


class ExceptionalPointError(EdwardsCMError, ArithmeticError):
    """A birational map or incomplete addition law hit a zero denominator."""


class SpecialJError(InvalidParameterError):
    """j = 0 or j = 1728, where the generic parameterizations break down."""


class WrongTypeError(InvalidParameterError):
    """The curve does not have the 2-torsion type an operation requires."""


class NotAKernelError(InvalidParameterError):
    pass


class UnsupportedCurveError(EdwardsCMError):
    """Supersingular input where an ordinary curve is required."""


class NoEdwardsFormError(EdwardsCMError):
    """No curve reachable by 2-isogenies admits a complete Edwards form."""


class UnreachableTargetError(EdwardsCMError):
    """A requested model conversion does not exist for this curve."""


class ResourceLimitError(EdwardsCMError):
    pass


class ConsistencyError(EdwardsCMError, AssertionError):
    """An internal identity failed; always indicates a bug."""
