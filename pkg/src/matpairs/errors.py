"""Exception hierarchy shared by every module of the package."""


class MatPairError(Exception):
    """Base class for all errors raised by matpairs."""


class DimensionMismatch(MatPairError, ValueError):
    pass


class ArityMismatch(DimensionMismatch):
    pass


class RingMismatch(MatPairError, ValueError):
    pass


class UnsupportedRing(MatPairError, ValueError):
    """The operation has no decision procedure over this ring kind."""


class NotAField(UnsupportedRing):
    pass


class NotEuclidean(UnsupportedRing):
    pass


class UnsupportedHom(MatPairError, ValueError):
    pass


class ChainMismatch(MatPairError, ValueError):
    """Two certified relations do not share the middle pair."""


class UnverifiedCertificate(MatPairError, ValueError):
    pass


class ScaleCapExceeded(MatPairError, RuntimeError):
    """A brute-force enumeration would exceed its configured cap."""


class ParseError(MatPairError, ValueError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
            if text:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)
