"""Exception hierarchy.

Every error carries a short machine-readable ``code`` which the command-line
front end reports verbatim.
"""


class TropError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "TropError"

    def __init__(self, detail="", **info):
        super().__init__(detail)
        self.detail = detail
        self.info = info


class PositivityViolation(TropError, ValueError):
    code = "PositivityViolation"


class AlgebraMismatch(TropError, TypeError):
    code = "AlgebraMismatch"


class AlgebraUnsupported(TropError, TypeError):
    code = "AlgebraUnsupported"


class BoundsError(TropError, IndexError):
    code = "BoundsError"


class LengthMismatch(TropError, ValueError):
    code = "LengthMismatch"


class EmptyFamily(TropError):
    """No family of nonintersecting paths exists: the minor vanishes."""

    code = "EmptyFamily"


class ZeroMinor(EmptyFamily):
    """Rational flavour of :class:`EmptyFamily`."""

    code = "ZeroMinor"


class CapExceeded(TropError):
    code = "CapExceeded"


class DecompositionObstruction(TropError):
    code = "DecompositionObstruction"

    def __init__(self, i, j, detail=""):
        super().__init__(detail or f"vanishing minor at ({i}, {j})", i=i, j=j)
        self.i = i
        self.j = j


class SpectralPole(TropError, ZeroDivisionError):
    code = "SpectralPole"


class NotInTauCell(TropError):
    code = "NotInTauCell"


class ShapeMismatch(TropError, ValueError):
    code = "ShapeMismatch"


class UnsupportedShape(TropError, ValueError):
    code = "UnsupportedShape"


class GenericityFailure(TropError, ZeroDivisionError):
    code = "GenericityFailure"


class InvalidWord(TropError, ValueError):
    code = "InvalidWord"
