"""Exception types shared across the package."""


class ArtinTwistError(Exception):
    """Base class for errors raised by this package."""


class ParseError(ArtinTwistError):
    """A text input (graph, expression, or path) is malformed.

    Carries a 1-based line and column so CLI users get a usable
    diagnostic.
    """

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.bare_message = message


class ContractViolation(ArtinTwistError, ValueError):
    """An operation was called outside its documented precondition."""


class InternalInconsistencyError(ArtinTwistError, RuntimeError):
    """The library contradicted itself; this always indicates a bug.

    Raised when a certified-impossible situation is observed, e.g. a
    nonempty reduced expression whose action fixes every groupoid
    generator.
    """
