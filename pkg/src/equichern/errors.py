"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`EquichernError`, so callers (and the CLI) can tell domain failures
apart from programming errors.
"""


class EquichernError(Exception):
    pass


class MalformedPermutationError(EquichernError, ValueError):
    pass


class SizeLimitError(EquichernError):
    pass


class GroupMismatchError(EquichernError, ValueError):
    pass


class SpaceMismatchError(EquichernError, ValueError):
    pass


class InconsistentMapError(EquichernError, ValueError):
    """A CellMap whose declared fiber Euler characteristics contradict the atoms."""


class NotInvertibleError(EquichernError, ZeroDivisionError):
    pass


class DegreeMismatchError(EquichernError, ValueError):
    pass


class InvalidSpecError(EquichernError, ValueError):
    pass


class DegreeMismatchWarning(UserWarning):
    pass
