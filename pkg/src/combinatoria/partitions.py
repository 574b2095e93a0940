"""Integer partitions and the partition <-> conjugacy-class correspondence.

A partition of N ("discerptio") is a non-increasing sequence of positive
integers summing to N.  Partitions of n index the conjugacy classes of S_n:
the parts are the cycle lengths.  Class sizes come from the classical
quotient n! / (1^a1 a1! 2^a2 a2! ... n^an an!), evaluated exactly.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Iterator

from .errors import EnumerationTooLargeError, InvariantViolationError
from .perm import CycleType

__all__ = [
    "Partition",
    "ClassOrder",
    "enumerate_partitions",
    "count_partitions",
    "two_part_count",
    "class_order",
    "cycle_types_of",
    "partition_to_cycle_type",
    "cycle_type_to_partition",
    "DEFAULT_ENUMERATION_CEILING",
]

# p(120) is ~1.8e6 partitions: still materializable.  Counting has no ceiling.
DEFAULT_ENUMERATION_CEILING = 120


@dataclass(frozen=True, slots=True)
class Partition:
    """Non-increasing positive parts; the empty partition has total 0.

    >>> str(Partition((3, 2, 1)))
    '3,2,1'
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = None
        for x in self.parts:
            if x < 1 or (prev is not None and x > prev):
                raise InvariantViolationError(
                    f"parts must be non-increasing positives: {self.parts}"
                )
            prev = x

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)


def _descending_parts(n: int) -> Iterator[tuple[int, ...]]:
    # Reverse-lexicographic walk by in-place mutation: decrement the
    # rightmost part above 1, then redistribute what fell off greedily.
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        j = len(parts) - 1
        spare = 0
        while j >= 0 and parts[j] == 1:
            spare += 1
            j -= 1
        if j < 0:
            return
        parts[j] -= 1
        cap = parts[j]
        spare += 1
        del parts[j + 1:]
        while spare:
            take = min(cap, spare)
            parts.append(take)
            spare -= take


def enumerate_partitions(
    n: int, ceiling: int = DEFAULT_ENUMERATION_CEILING
) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order.

    >>> [str(p) for p in enumerate_partitions(4)]
    ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']
    """
    if n < 0:
        raise InvariantViolationError("partitions are defined for n >= 0")
    if n > ceiling:
        raise EnumerationTooLargeError(
            f"enumerating partitions of {n} exceeds the ceiling {ceiling}; "
            f"count_partitions({n}) still works"
        )
    return [Partition(parts) for parts in _descending_parts(n)]


# Euler's pentagonal recurrence, memoized bottom-up.  The table only grows,
# and the lock keeps concurrent fills consistent.
_pn_table: list[int] = [1]
_pn_lock = threading.Lock()


def count_partitions(n: int) -> int:
    """Exact p(n): p(0) = 1, p(6) = 11, p(100) = 190569292."""
    if n < 0:
        raise InvariantViolationError("partitions are defined for n >= 0")
    with _pn_lock:
        while len(_pn_table) <= n:
            m = len(_pn_table)
            acc = 0
            k = 1
            while True:
                g1 = m - k * (3 * k - 1) // 2  # pentagonal number k(3k-1)/2
                if g1 < 0:
                    break
                term = _pn_table[g1]
                g2 = g1 - k  # second pentagonal number k(3k+1)/2
                if g2 >= 0:
                    term += _pn_table[g2]
                acc += term if k % 2 else -term
                k += 1
            _pn_table.append(acc)
        return _pn_table[n]


def two_part_count(n: int) -> int:
    """Partitions of n into exactly two parts: n/2 if even, (n-1)/2 if odd.

    For n < 2 there is no two-part partition; the count is 0, not an error.
    """
    if n < 2:
        return 0
    return n // 2


@dataclass(frozen=True)
class ClassOrder:
    """The exact size of one conjugacy class of S_n."""

    degree: int
    cycle_type: CycleType
    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise InvariantViolationError("a conjugacy class has at least one element")


def class_order(t: CycleType) -> ClassOrder:
    """Size of the class with cycle structure t.

    n! divided by the product of i^alpha_i * alpha_i!, all exact integers
    (0! = 1, so absent cycle lengths contribute nothing).
    """
    n = t.degree
    denominator = 1
    for i, a in enumerate(t.alpha, start=1):
        denominator *= i**a * math.factorial(a)
    order = math.factorial(n) // denominator
    return ClassOrder(degree=n, cycle_type=t, order=order)


def partition_to_cycle_type(p: Partition) -> CycleType:
    """Read the parts as cycle lengths of a permutation of degree sum(parts)."""
    if p.total < 1:
        raise InvariantViolationError("the empty partition names no cycle type")
    return CycleType.from_cycle_lengths(p.total, p.parts)


def cycle_type_to_partition(t: CycleType) -> Partition:
    return Partition(t.cycle_lengths())


def cycle_types_of(
    n: int, ceiling: int = DEFAULT_ENUMERATION_CEILING
) -> list[CycleType]:
    """One cycle type per conjugacy class of S_n; there are p(n) of them.

    Ordered like enumerate_partitions(n): the full n-cycle class first, the
    identity class last.
    """
    if n < 1:
        raise InvariantViolationError("S_n needs n >= 1")
    return [partition_to_cycle_type(p) for p in enumerate_partitions(n, ceiling)]
