"""The twelve classical problems as named operations.

The corpus splits into three groups: complexions (problems 1-3), variations
of order and of disposition (4-6), and the head-derived problems (7-12).
Only problems 4, 5, 7 and 10 survive with usable content; problems 1-3 are
covered by the complexion family (subset counting), and the remaining ids
are reserved tags carried with a "not specified in source" status rather
than invented solutions.

Everything here is exact integer arithmetic; the enumerating variants cap
their output sizes, the counting variants do not.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .caput import CaputSpec, HeadMode, count_caput
from .errors import EnumerationTooLargeError, InvalidDegreeError, InvariantViolationError
from .perm import Permutation

__all__ = [
    "ProblemResult",
    "CaputReduction",
    "complexions",
    "complexiones_simpliciter",
    "variations_of_order",
    "vicinity_variations",
    "vicinity_classes",
    "canonical_vicinity",
    "problem7_product",
    "solve",
    "reduce_to_caput",
    "PROBLEM_TITLES",
    "SIMPLICITER",
    "VICINITY_CLASS_CEILING",
]

# (n-1)! representatives are materialized as a list; 9! is the comfort limit.
VICINITY_CLASS_CEILING = 10

SIMPLICITER = "simpliciter"

PROBLEM_TITLES: dict[int | str, str] = {
    1: "complexions of a given exponent (subset counting)",
    2: "complexions of a given exponent (subset counting)",
    3: "complexions of a given exponent (subset counting)",
    4: "variations of order: all rearrangements of n things",
    5: "variations of vicinity: rearrangements up to rotation on a circle",
    6: "not specified in source",
    7: "given the invariant head, find the variations",
    8: "not specified in source",
    9: "not specified in source",
    10: "containment of a smaller variation in a larger one (head test)",
    11: "not specified in source",
    12: "not specified in source",
    SIMPLICITER: "all complexions of a whole, every exponent at once",
}

_SOLVABLE = {1, 2, 3, 4, 5, 7, SIMPLICITER}


def complexions(n: int, k: int) -> int:
    """Size-k sub-wholes of an n-whole: the binomial coefficient.

    k = 1 counts the "unions" (singletons); k > n yields 0, not an error.
    """
    if n < 0 or k < 0:
        raise InvariantViolationError("complexions need n >= 0 and k >= 0")
    if k > n:
        return 0
    return math.comb(n, k)


def complexiones_simpliciter(n: int, include_empty: bool = False) -> int:
    """All non-empty complexions of an n-whole: 2^n - 1.

    The count traditionally starts at the unions, so the empty sub-whole is
    excluded; pass include_empty=True for the 2^n variant.
    """
    if n < 1:
        raise InvalidDegreeError("a whole needs at least one part")
    return 2**n if include_empty else 2**n - 1


def variations_of_order(n: int) -> int:
    """All rearrangements of n distinct things: n!."""
    if n < 1:
        raise InvalidDegreeError("variations of order need n >= 1")
    return math.factorial(n)


def vicinity_variations(n: int) -> int:
    """Rearrangements of n things on a circle, counted up to rotation: (n-1)!.

    Only the oriented neighbourhood matters, so the n rotations of one
    arrangement collapse: n!/n.  Reflections are distinct on purpose; the
    24/4 = 6 arithmetic of the classical four-letter example forces the
    rotation-only reading.
    """
    if n < 1:
        raise InvalidDegreeError("vicinity variations need n >= 1")
    return math.factorial(n - 1)


def canonical_vicinity(arrangement: Permutation | Sequence[int]) -> Permutation:
    """The rotation of the arrangement that places point 1 first.

    Two arrangements are vicinity-equivalent iff they canonicalize equally:
    abcd, bcda, cdab and dabc all land on abcd.
    """
    image = arrangement.image if isinstance(arrangement, Permutation) else tuple(arrangement)
    p = Permutation(image)  # validates the arrangement
    k = p.image.index(1)
    return Permutation(p.image[k:] + p.image[:k])


def vicinity_classes(n: int, ceiling: int = VICINITY_CLASS_CEILING) -> list[Permutation]:
    """One canonical representative per rotation class, (n-1)! in all.

    Representatives start with point 1 and come out in lexicographic order.
    """
    if n < 1:
        raise InvalidDegreeError("vicinity classes need n >= 1")
    if n > ceiling:
        raise EnumerationTooLargeError(
            f"materializing ({n}-1)! class representatives exceeds the ceiling "
            f"{ceiling}; vicinity_variations({n}) still counts them"
        )
    return [
        Permutation((1,) + rest)
        for rest in itertools.permutations(range(2, n + 1))
    ]


def problem7_product(n: int, head_size: int) -> int:
    """The product A: variations of the n-k exterior things, i.e. (n-k)!.

    This mirrors the classical reduction explicitly - fixing a head of size
    k leaves a plain variation-of-order problem on the rest - and must always
    agree with count_caput in LOOSE mode.
    """
    if not 0 <= head_size <= n:
        raise InvariantViolationError(f"head size {head_size} outside 0..{n}")
    return math.factorial(n - head_size)


@dataclass(frozen=True)
class ProblemResult:
    """Outcome of solving one numbered problem."""

    problem_id: int | str
    inputs: dict
    count: int | None
    witnesses: tuple | None = None
    truncated: bool = False
    status: str = "ok"  # "ok" | "not-specified-in-source" | "not-a-counting-problem"

    def __post_init__(self) -> None:
        if self.witnesses is not None and not self.truncated:
            if self.count != len(self.witnesses):
                raise InvariantViolationError(
                    f"{len(self.witnesses)} witnesses against count {self.count}"
                )


@dataclass(frozen=True)
class CaputReduction:
    """How a problem's count is recovered through the head machinery.

    ``status`` is "ok" when both routes were computed, "not-reducible" when
    the reduction is known to be impossible (complexiones simpliciter), and
    "not-specified-in-source" for the reserved problem ids.
    """

    problem_id: int | str
    inputs: dict
    status: str
    direct_count: int | None = None
    caput_count: int | None = None
    head_description: str = ""
    note: str = ""

    @property
    def agrees(self) -> bool | None:
        if self.status != "ok":
            return None
        return self.direct_count == self.caput_count


def _witnesses_for(problem_id: int | str, n: int, k: int | None, limit: int):
    if problem_id in (1, 2, 3):
        pool = range(1, n + 1)
        items = [frozenset(c) for c in itertools.combinations(pool, k)]
    elif problem_id == 4:
        items = list(itertools.permutations(range(1, n + 1)))
    elif problem_id == 5:
        items = [p.image for p in vicinity_classes(n)]
    elif problem_id == SIMPLICITER:
        pool = range(1, n + 1)
        items = [
            frozenset(c)
            for size in range(1, n + 1)
            for c in itertools.combinations(pool, size)
        ]
    else:
        return None, False
    if len(items) > limit:
        return tuple(items[:limit]), True
    return tuple(items), False


def solve(
    problem_id: int | str,
    n: int,
    k: int | None = None,
    with_witnesses: bool = False,
    witness_limit: int = 1000,
) -> ProblemResult:
    """Solve one numbered problem for n things (k where an exponent is needed).

    Reserved ids return a ProblemResult with a not-specified status instead
    of a fabricated answer.
    """
    if problem_id not in PROBLEM_TITLES:
        raise InvariantViolationError(
            f"unknown problem id {problem_id!r}; use 1..12 or {SIMPLICITER!r}"
        )
    inputs = {"n": n} if k is None else {"n": n, "k": k}
    if problem_id == 10:
        # containment is a predicate, not a count: see caput.is_caput_of
        return ProblemResult(problem_id, inputs, count=None, status="not-a-counting-problem")
    if problem_id not in _SOLVABLE:
        return ProblemResult(problem_id, inputs, count=None, status="not-specified-in-source")

    if problem_id in (1, 2, 3):
        if k is None:
            raise InvariantViolationError("complexion problems need the exponent k")
        count = complexions(n, k)
    elif problem_id == 4:
        count = variations_of_order(n)
    elif problem_id == 5:
        count = vicinity_variations(n)
    elif problem_id == 7:
        if k is None:
            raise InvariantViolationError("problem 7 needs the head size k")
        count = problem7_product(n, k)
    else:  # SIMPLICITER
        count = complexiones_simpliciter(n)

    witnesses = None
    truncated = False
    if with_witnesses:
        witnesses, truncated = _witnesses_for(problem_id, n, k, witness_limit)
    return ProblemResult(problem_id, inputs, count, witnesses, truncated)


def reduce_to_caput(problem_id: int | str, n: int, k: int | None = None) -> CaputReduction:
    """Recover a problem's count through head machinery and compare.

    Problem 4 is the empty-head LOOSE count; problem 5 the monadic-head LOOSE
    count; problems 1-3 count the possible heads of exponent k by listing
    them.  Complexiones simpliciter cannot be reached this way: the result
    carries an explicit not-reducible marker, never a fabricated reduction.
    """
    if problem_id != SIMPLICITER and problem_id not in range(1, 7):
        raise InvariantViolationError(
            f"reduction targets problems 1..6 or {SIMPLICITER!r}; the head "
            f"problems 7..12 are the machinery itself, not its clients"
        )
    inputs = {"n": n} if k is None else {"n": n, "k": k}

    if problem_id == SIMPLICITER:
        return CaputReduction(
            problem_id,
            inputs,
            status="not-reducible",
            direct_count=complexiones_simpliciter(n),
            note="the sum over all exponents at once does not arise from any "
            "single invariant head",
        )
    if problem_id in (1, 2, 3):
        if k is None:
            raise InvariantViolationError("complexion problems need the exponent k")
        direct = complexions(n, k)
        # The exponent-k complexions are exactly the possible heads of size k:
        # count them by listing them, not by reusing the binomial formula.
        via_heads = sum(1 for _ in itertools.combinations(range(1, n + 1), k))
        return CaputReduction(
            problem_id,
            inputs,
            status="ok",
            direct_count=direct,
            caput_count=via_heads,
            head_description=f"all size-{k} heads over 1..{n}, counted by enumeration",
        )
    if problem_id == 4:
        direct = variations_of_order(n)
        spec = CaputSpec(degree=n, head=frozenset(), mode=HeadMode.LOOSE)
        return CaputReduction(
            problem_id,
            inputs,
            status="ok",
            direct_count=direct,
            caput_count=count_caput(spec),
            head_description="empty head, loose mode",
        )
    if problem_id == 5:
        direct = vicinity_variations(n)
        spec = CaputSpec(degree=n, head=frozenset({1}), mode=HeadMode.LOOSE)
        return CaputReduction(
            problem_id,
            inputs,
            status="ok",
            direct_count=direct,
            caput_count=count_caput(spec),
            head_description="monadic head at position 1, loose mode",
        )
    return CaputReduction(
        problem_id,
        inputs,
        status="not-specified-in-source",
        note=PROBLEM_TITLES[problem_id],
    )
