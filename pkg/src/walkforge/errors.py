"""Exception hierarchy shared by every walkforge module."""


class WalkForgeError(Exception):
    """Base class for all walkforge errors."""


class PreconditionError(WalkForgeError, ValueError):
    """An input violates a documented precondition of a constructor or rule."""


class DimensionError(WalkForgeError, ValueError):
    """Operands have incompatible dimensions or wire counts."""


class CommutationError(WalkForgeError):
    """Two adjacency matrices that must commute do not."""


class EmbeddingError(WalkForgeError):
    """A sub-walk cannot be placed on the index space a rule requires."""


class ResourceError(WalkForgeError):
    """A size cap (graph dimension or unitary wire count) was exceeded."""


class ParseError(WalkForgeError, ValueError):
    """Syntax error in a walk expression.

    ``offset`` is the byte offset of the offending token and ``expected`` the
    set of tokens that would have been accepted there.
    """

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        exp = ", ".join(sorted(self.expected))
        detail = f" (expected one of: {exp})" if exp else ""
        super().__init__(f"{message} at offset {offset}{detail}")
