"""Exception hierarchy. Everything derives from ValueError so callers can catch broadly."""


class OrbitError(ValueError):
    pass


class SizeMismatch(OrbitError):
    pass


class EmptyPartition(OrbitError):
    pass


class ParityMismatch(OrbitError):
    pass


class SizeGuardExceeded(OrbitError):
    pass


class NoUniqueMaximum(OrbitError):
    """The brute-force collapse found several maximal candidates (should be impossible)."""


class TypeMismatch(OrbitError):
    pass


class PreconditionViolated(OrbitError):
    pass


class ContextMismatch(OrbitError):
    pass


class MissingDivisionData(OrbitError):
    pass


class DivisibilityError(OrbitError):
    pass


class DimensionMismatch(OrbitError):
    pass


class ParseError(OrbitError):
    """Malformed text input. ``position`` is a 0-based offset into the source string."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}" + (f": {text!r}" if text else ""))


class PartitionSyntaxError(ParseError):
    pass


class ParameterSyntaxError(ParseError):
    pass


class LeviSyntaxError(ParseError):
    pass
