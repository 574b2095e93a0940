"""Person counts and coordinates in the consanguinity tree.

At degree n (the *gradus*) the tree carries N = n + 1 kinship ranks
(*cognationes*) and 2^n * N persons.  Each tree point is located by an
ordered pair (antecedens, sequens); (a, b) and (b, a) are different points.

The classical source states the count but not which pairs occur.  The layout
used here is a reconstruction, version-tagged "reconstructed-v1" in every
output: antecedens enumerates the 2^n ancestral paths (0 .. 2^n - 1),
sequens the n + 1 kinship ranks (0 .. n).  That realizes exactly 2^n * (n+1)
distinct ordered pairs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import EnumerationTooLargeError, InvariantViolationError
from .partitions import two_part_count

__all__ = [
    "TreeCoordinate",
    "GradusModel",
    "personae_count",
    "discerptiones_two",
    "coordinates",
    "LAYOUT_VERSION",
    "COORDINATE_CEILING",
]

LAYOUT_VERSION = "reconstructed-v1"

# 2^20 * 21 coordinates is the materialization limit.
COORDINATE_CEILING = 20


@dataclass(frozen=True)
class TreeCoordinate:
    """An ordered pair locating one person; order matters."""

    antecedens: int
    sequens: int

    def __post_init__(self) -> None:
        if self.antecedens < 0 or self.sequens < 0:
            raise InvariantViolationError("coordinates are non-negative")

    def swapped(self) -> "TreeCoordinate":
        return TreeCoordinate(self.sequens, self.antecedens)


@dataclass(frozen=True)
class GradusModel:
    """A degree of the tree and its derived rank count N = gradus + 1."""

    gradus: int

    def __post_init__(self) -> None:
        if self.gradus < 0:
            raise InvariantViolationError("gradus starts at 0, the subject person")

    @property
    def cognationes(self) -> int:
        return self.gradus + 1


def personae_count(gradus: int) -> int:
    """Persons at the given degree: 2^n * (n + 1), exactly."""
    model = GradusModel(gradus)
    return 2**model.gradus * model.cognationes


def discerptiones_two(n: int) -> int:
    """Partitions of the rank count N into two parts.

    Delegates to the shared two-part partition count, so the two operations
    cannot drift apart; N < 2 gives 0.
    """
    return two_part_count(n)


def coordinates(gradus: int, ceiling: int = COORDINATE_CEILING) -> list[TreeCoordinate]:
    """All person coordinates at the given degree under the v1 layout.

    Ordered pairs come out in lexicographic order, so (a, b) precedes (b, a)
    whenever a < b and both occur.  The list length is personae_count(gradus).
    """
    model = GradusModel(gradus)
    if model.gradus > ceiling:
        raise EnumerationTooLargeError(
            f"materializing 2^{model.gradus} * {model.cognationes} coordinates "
            f"exceeds the ceiling {ceiling}; personae_count still works"
        )
    return [
        TreeCoordinate(path, rank)
        for path in range(2**model.gradus)
        for rank in range(model.cognationes)
    ]
