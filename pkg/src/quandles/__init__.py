"""Connected quandles, quandle envelopes, and transitive-group enumeration."""

from .perm import (
    BoundExceededError,
    DegreeMismatchError,
    NotAMemberError,
    PermGroup,
    Permutation,
    compose,
    conjugate,
    group_from_generators,
)

__all__ = [
    "BoundExceededError",
    "DegreeMismatchError",
    "NotAMemberError",
    "PermGroup",
    "Permutation",
    "compose",
    "conjugate",
    "group_from_generators",
]

__version__ = "0.1.0"
