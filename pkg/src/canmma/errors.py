"""Exception hierarchy shared by all modules."""


class CanmmaError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class PolySyntaxError(CanmmaError, ValueError):
    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}" + (f": {text!r}" if text else ""))


class PolyError(CanmmaError, ValueError):
    pass


class InvalidFactorData(CanmmaError, ValueError):
    pass


class InvalidFlag(CanmmaError, ValueError):
    pass


class InvalidWord(CanmmaError, ValueError):
    pass


class InvalidSummandSet(CanmmaError, ValueError):
    pass


class MissingReps(CanmmaError, ValueError):
    pass
