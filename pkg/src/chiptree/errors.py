"""Exception hierarchy shared by all chiptree modules."""


class ChipTreeError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(ChipTreeError):
    """Structurally invalid graph input (loops, bad vertex indices, ...)."""


class DomainError(ChipTreeError):
    """An operation was called outside its stated precondition."""


class NotFireableError(DomainError):
    """A set was fired that does not satisfy the firing condition."""

    def __init__(self, vertex, outdeg, chips):
        self.vertex = vertex
        self.outdeg = outdeg
        self.chips = chips
        super().__init__(
            f"set is not fireable: vertex {vertex} has {chips} chips "
            f"but {outdeg} edges leaving the set"
        )


class BudgetError(ChipTreeError):
    """A brute-force search space exceeds the configured budget."""


class InternalError(ChipTreeError):
    """A proven termination bound was exceeded; indicates a bug, not bad input."""


class FormatError(ChipTreeError):
    """Malformed input file or document."""
