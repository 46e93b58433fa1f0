"""Exception types raised by the library.

Failures of a mathematical property (a bracket that breaks hom-Jacobi, a
map that is not a derivation) are returned as reports, not raised.  The
exceptions below signal violated preconditions or malformed input.
"""


class HomLieError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(HomLieError, ValueError):
    pass


class Singular(HomLieError, ArithmeticError):
    pass


class NotContained(HomLieError):
    pass


class NotMultiplicative(HomLieError):
    pass


class NotRegular(HomLieError):
    pass


class InvalidRepresentation(HomLieError):
    pass


class NotHomCochain(HomLieError):
    pass


class NotCoboundary(HomLieError):
    pass


class DegreeOutOfRange(HomLieError, ValueError):
    pass


class NotCommutingWithAlpha(HomLieError):
    pass


class NotNijenhuis(HomLieError):
    pass


class FormatError(HomLieError, ValueError):
    """Input file does not match the declared schema; message names the field."""
