"""Exception hierarchy. Validation problems are ``ValueError`` subclasses."""


class ValidationError(ValueError):
    """Input does not describe a valid segment family."""


class MalformedRational(ValidationError):
    """A string is not of the form ``n`` or ``n/d``."""


class MissingField(ValidationError):
    pass


class TooFew(ValidationError):
    pass


class DuplicateAbscissa(ValidationError):
    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


class InvertedBounds(ValidationError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NoTransversalError(ValueError):
    """The family admits no common transversal, so no line can be selected."""


class OracleMismatch(AssertionError):
    """An independent oracle disagrees with the main computation."""

    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance
