"""Exception hierarchy shared by all modules."""


class SpectraError(Exception):
    pass


class InvalidParameter(SpectraError, ValueError):
    pass


class AxiomViolation(SpectraError):
    """A presented structure fails a ring (or order) axiom.

    ``witness`` holds the offending element tuple when one is known.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeBound(SpectraError):
    def __init__(self, what, size, bound):
        super().__init__(f"{what}: size {size} exceeds bound {bound}")
        self.what = what
        self.size = size
        self.bound = bound


class MixedRings(SpectraError, ValueError):
    pass


class MixedSpectra(SpectraError, ValueError):
    pass


class NotIdempotent(SpectraError, ValueError):
    pass


class InvalidIdeal(SpectraError, ValueError):
    pass


class NotRegular(SpectraError, ValueError):
    pass


class NotProper(SpectraError, ValueError):
    pass


class EmptyFamily(SpectraError, ValueError):
    pass


class CycleDetected(SpectraError, ValueError):
    def __init__(self, message, cycle=()):
        super().__init__(message)
        self.cycle = tuple(cycle)


class NotClosed(SpectraError, ValueError):
    pass


class NotOpen(SpectraError, ValueError):
    pass


class ParseError(SpectraError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
