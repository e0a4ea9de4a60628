"""Exception hierarchy shared by the library and the command line."""


class CrautomataError(Exception):
    """Base class for every error raised by this package."""


class InvalidAutomaton(CrautomataError, ValueError):
    pass


class InvalidParameters(CrautomataError, ValueError):
    pass


class ParseError(CrautomataError, ValueError):
    pass


class ResourceLimit(CrautomataError):
    """A guarded search would exceed its configured state-count bound."""


class IndexIncomplete(CrautomataError):
    """Signatures of a defect level were requested before it was enumerated."""


class PreconditionViolated(CrautomataError):
    pass


class NoEdgeFound(CrautomataError):
    """Witness synthesis ran out of usable edges.

    On a SUCCESS verdict this cannot happen unless an internal invariant is
    broken, so it is not a user error.
    """


class EmptyTarget(CrautomataError, ValueError):
    pass


class LevelOutOfRange(CrautomataError, ValueError):
    pass
