"""Exception hierarchy shared by all submodules."""


class MomentAngleError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertex(MomentAngleError, ValueError):
    """A vertex index is outside {1, ..., m}."""


class NotAFace(MomentAngleError, ValueError):
    """A subset that was required to be a face is not one."""


class NotAComplex(MomentAngleError, ValueError):
    """The composite of two consecutive boundary maps is nonzero."""


class NotACycle(MomentAngleError, ValueError):
    """A chain that was required to be a cycle has nonzero boundary."""


class LNotInJ(MomentAngleError, ValueError):
    """Shuffle sign requested for a set that is not contained in J."""


class OverlappingSupport(MomentAngleError, ValueError):
    """Product of cellular chains whose vertex supports intersect."""


class ParseError(MomentAngleError, ValueError):
    """Syntax error in a bracket expression or chain string."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DuplicateVertex(ParseError):
    """A leaf vertex occurs twice in a bracket expression."""


class ArityError(ParseError):
    """A bracket has fewer than two arguments."""


class NotNestedForm(MomentAngleError, ValueError):
    """Operation defined only for nested bracket expressions."""
