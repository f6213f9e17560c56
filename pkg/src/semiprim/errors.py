"""Exception types raised by the library.

Every failure mode that callers are expected to handle has its own class;
all of them derive from :class:`SemiprimError` so CLI code can catch one
thing and map it to an exit code.
"""


class SemiprimError(Exception):
    """Base class for all library errors."""


class MalformedPermutation(SemiprimError, ValueError):
    """Image array is not a bijection of {0..n-1}."""


class DegreeMismatch(SemiprimError, ValueError):
    """Two permutations (or a group and an element) have different degrees."""


class CapExceeded(SemiprimError, RuntimeError):
    """A configured desk-scale cap would be exceeded.

    Caps are never silently truncated; the caller either raises the cap or
    restructures the computation.
    """


class NotASubgroup(SemiprimError, ValueError):
    """An alleged subgroup contains elements outside the ambient group."""


class NotInvariant(SemiprimError, ValueError):
    """A point set is not invariant under the acting group."""


class NotTransitive(SemiprimError, ValueError):
    """An operation required a transitive action."""


class NotAutomorphism(SemiprimError, ValueError):
    """Claimed generator images do not define an automorphism."""


class NotArcTransitive(SemiprimError, ValueError):
    """A graph/group pair is not arc-transitive."""


class ConnectivityError(SemiprimError, ValueError):
    """A coset graph recipe produced a disconnected graph."""


class ParameterError(SemiprimError, ValueError):
    """A family builder was given parameters outside its supported range."""


class InconsistencyError(SemiprimError, RuntimeError):
    """An internal cross-check failed; indicates a bug, never user error."""
