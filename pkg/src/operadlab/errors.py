"""Exception hierarchy shared by all operadlab modules."""


class OperadLabError(Exception):
    """Base class for every error raised by operadlab."""


class WordError(OperadLabError, ValueError):
    """A sequence is not a valid word (non-positive or non-integer letters)."""


class DuplicateLetterError(WordError):
    """A letter occurs twice, or a fresh letter already occurs in the context."""


class NotAPermutationError(WordError):
    pass


class EmptyWordError(WordError):
    """An operation defined on nonempty words received the empty word."""


class MissingLetterError(WordError):
    pass


class ParseError(OperadLabError, ValueError):
    pass


class SizeMismatchError(OperadLabError, ValueError):
    """Two objects that must live in the same S_n or Y_n do not."""


class LeafIndexError(OperadLabError, IndexError):
    pass


class PositionError(OperadLabError, ValueError):
    """Adjacent-position index outside 1..n-1."""


class ResourceLimitError(OperadLabError):
    """Requested size exceeds the configured enumeration limit."""


class TermError(OperadLabError, ValueError):
    pass


class CompositionPositionError(TermError):
    """Partial composition at a position outside 1..arity(head)."""


class IndexOverlapError(TermError):
    """Partial composition of two terms sharing a generator index."""


class NotLFactorError(TermError):
    pass


class RewriteError(OperadLabError):
    pass


class InvalidPathError(RewriteError):
    pass


class PatternMismatchError(RewriteError):
    pass


class SideConditionError(RewriteError):
    pass


class NotACoverError(OperadLabError, ValueError):
    pass
