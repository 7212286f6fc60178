"""Exception hierarchy shared by all umbral modules."""


class UmbralError(Exception):
    """Base class for every error raised by this package."""


class ClassMismatchError(UmbralError):
    """A series fails an order / constant-term precondition."""


class OutOfRangeError(UmbralError):
    """An index or degree reaches past the retained truncation."""


class InvalidParameterError(UmbralError):
    """A scalar or range parameter is outside its allowed domain."""


class InvalidInputError(UmbralError):
    """Structurally incompatible inputs (shape or content)."""
