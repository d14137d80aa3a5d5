"""Exception types raised across the package.

Every error that library code raises deliberately derives from
:class:`SignedBalanceError`, so callers (and the CLI) can distinguish
"your input or parameters are wrong" from genuine bugs.
"""


class SignedBalanceError(Exception):
    """Base class for all errors raised by this package."""


# graph construction ---------------------------------------------------------

class DuplicateNodeError(SignedBalanceError):
    """A node id appears more than once in the node list."""


class DuplicateEdgeError(SignedBalanceError):
    """Two edges connect the same unordered node pair."""


class SelfLoopError(SignedBalanceError):
    """An edge connects a node to itself."""


class DanglingEndpointError(SignedBalanceError):
    """An edge endpoint is not in the node list."""


class EmptyGraphError(SignedBalanceError):
    """The operation needs at least one node."""


class PartialPartitionError(SignedBalanceError):
    """A partition does not assign every node to a side."""


# spectral -------------------------------------------------------------------

class ConvergenceFailureError(SignedBalanceError):
    """The iterative eigensolver did not converge."""


class NoEdgesError(SignedBalanceError):
    """The operation needs at least one edge."""


class DegenerateDenominatorError(SignedBalanceError):
    """Normalization denominator is not positive (max mean degree <= 1)."""


# frustration ----------------------------------------------------------------

class GraphTooLargeError(SignedBalanceError):
    """The graph exceeds the exact-enumeration size cap."""


class InvalidScheduleError(SignedBalanceError):
    """An annealing schedule parameter is out of range."""


class ZeroEdgesError(SignedBalanceError):
    """Normalized frustration is undefined for an edgeless graph."""


# layout ---------------------------------------------------------------------

class MismatchedResultError(SignedBalanceError):
    """A spectral result belongs to a different node set than the graph."""


class UnknownGroupColorError(SignedBalanceError):
    """A node group has no color in the style map and no default is set."""


# vote ingestion -------------------------------------------------------------

class SchemaError(SignedBalanceError):
    """A CSV stream is missing required columns or violates uniqueness."""


class UnknownCastCodeError(SignedBalanceError):
    """A cast code is outside the documented 0-9 range."""


class UnmatchedMemberError(SignedBalanceError):
    """A vote references a member missing from the membership table."""


class TooFewVotersError(SignedBalanceError):
    """A roll call has fewer than two voting members."""


class DegenerateSampleError(SignedBalanceError):
    """A sample set is empty, constant, or otherwise unusable for KDE."""


# generator ------------------------------------------------------------------

class DisconnectedError(SignedBalanceError):
    """No connected graph was produced within the retry budget."""


class EmptyPoolError(SignedBalanceError):
    """An edge pool is too small for the requested number of sign flips."""


# benchmarks -----------------------------------------------------------------

class MissingGraphError(SignedBalanceError):
    """The benchmark input directory does not exist."""


class UnreadableFileError(SignedBalanceError):
    """A graph file exists but cannot be parsed."""
