"""Exception hierarchy shared by all modules.

Validation problems (bad parameters, out-of-range vertices, domain
restrictions) and resource-cap overruns are kept distinct so that batch
drivers can map them to different exit codes.
"""


class EdgeIdealsError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(EdgeIdealsError, ValueError):
    """A caller-supplied parameter violates a documented precondition."""


class DomainError(EdgeIdealsError, ValueError):
    """The input is well-formed but outside the mathematical domain
    of the operation (e.g. vertex connectivity of a disconnected graph)."""


class GapUndefinedError(DomainError):
    """Initial-degree gap requested for a pair of equal ideals."""


class ResourceLimitError(EdgeIdealsError, RuntimeError):
    """A configured resource cap was exceeded.  Never raised silently:
    the message names the cap and the offending computation."""


class InternalInvariantError(EdgeIdealsError, RuntimeError):
    """An internal consistency assumption failed (e.g. a non-squarefree
    lex initial ideal of a binomial edge ideal).  Indicates a bug, not
    bad input."""
