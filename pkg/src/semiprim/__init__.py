"""Finite permutation groups, semiprimitivity deciders and local-action
anatomy of arc-transitive graphs, at desk scale.

Everything is deterministic: identical inputs produce identical chains,
orbits, reports and JSON bytes.
"""

from .caps import Caps, default_caps
from .errors import (
    CapExceeded,
    ConnectivityError,
    DegreeMismatch,
    InconsistencyError,
    MalformedPermutation,
    NotArcTransitive,
    NotASubgroup,
    NotAutomorphism,
    NotInvariant,
    NotTransitive,
    ParameterError,
    SemiprimError,
)
from .groups import (
    ActionHomomorphism,
    CosetAction,
    InducedAction,
    PermGroup,
    group_from_generators,
    quotient_action,
)
from .perms import Permutation, compose

__version__ = "0.1.0"

__all__ = [
    "ActionHomomorphism",
    "Caps",
    "CapExceeded",
    "ConnectivityError",
    "CosetAction",
    "DegreeMismatch",
    "InconsistencyError",
    "InducedAction",
    "MalformedPermutation",
    "NotArcTransitive",
    "NotASubgroup",
    "NotAutomorphism",
    "NotInvariant",
    "NotTransitive",
    "ParameterError",
    "PermGroup",
    "Permutation",
    "SemiprimError",
    "compose",
    "default_caps",
    "group_from_generators",
    "quotient_action",
    "__version__",
]
