"""Permutations of the points 1..n with their cycle structure.

Conventions, fixed once for the whole package:

- Points are 1-based: a permutation of degree n acts on {1, ..., n}.
- One-line notation: ``Permutation((1, 4, 3, 6, 5, 2))`` sends point i to
  ``image[i-1]``.  The textual form is ``[1,4,3,6,5,2]``.
- Composition is right-to-left: ``compose(p, q)`` applies q first, then p.
- Cycle notation lists every cycle, 1-cycles included, each cycle rotated so
  its smallest point comes first, cycles ordered by smallest point:
  ``(1)(3)(5)(246)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegreeMismatchError, InvalidDegreeError, InvariantViolationError

__all__ = [
    "Permutation",
    "Cycle",
    "CycleType",
    "identity",
    "compose",
    "inverse",
    "cycle_decomposition",
    "cycle_type",
    "fixed_points",
    "from_cycles",
    "parse_one_line",
    "parse_cycles",
    "parse_permutation",
    "format_one_line",
    "format_cycles",
    "point_to_symbol",
    "symbol_to_point",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n} in one-line form.

    >>> p = Permutation((1, 4, 3, 6, 5, 2))
    >>> p(2), p(6)
    (4, 2)
    >>> p.degree
    6
    """

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if n == 0:
            raise InvalidDegreeError("degree 0 is not admitted; degrees start at 1")
        if sorted(self.image) != list(range(1, n + 1)):
            raise InvariantViolationError(
                f"one-line form {list(self.image)} is not a bijection of 1..{n}"
            )

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= self.degree:
            raise InvariantViolationError(f"point {point} outside 1..{self.degree}")
        return self.image[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return format_one_line(self)

    def __repr__(self) -> str:
        return f"Permutation({self.image!r})"


@dataclass(frozen=True)
class Cycle:
    """A cycle of distinct points, stored with the smallest point first.

    A 1-cycle is a fixed point; it is kept, never dropped.
    """

    points: tuple[int, ...]

    def __post_init__(self) -> None:
        pts = tuple(self.points)
        if not pts:
            raise InvariantViolationError("a cycle needs at least one point")
        if len(set(pts)) != len(pts):
            raise InvariantViolationError(f"cycle {pts} repeats a point")
        if min(pts) <= 0:
            raise InvariantViolationError(f"cycle {pts} contains a non-positive point")
        # canonical rotation: smallest point first
        k = pts.index(min(pts))
        object.__setattr__(self, "points", pts[k:] + pts[:k])

    @property
    def length(self) -> int:
        return len(self.points)

    def __str__(self) -> str:
        if max(self.points) > 9:
            return "(" + ",".join(str(x) for x in self.points) + ")"
        return "(" + "".join(str(x) for x in self.points) + ")"


@dataclass(frozen=True)
class CycleType:
    """Cycle-count vector (alpha_1, ..., alpha_n): alpha[i-1] i-cycles.

    The defining identity 1*alpha_1 + 2*alpha_2 + ... + n*alpha_n = n is
    enforced at construction.
    """

    degree: int
    alpha: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise InvalidDegreeError("degree 0 is not admitted; degrees start at 1")
        if len(self.alpha) != self.degree or any(a < 0 for a in self.alpha):
            raise InvariantViolationError(
                f"alpha must be {self.degree} non-negative counts, got {self.alpha}"
            )
        weighted = sum(i * a for i, a in enumerate(self.alpha, start=1))
        if weighted != self.degree:
            raise InvariantViolationError(
                f"sum of i*alpha_i is {weighted}, expected the degree {self.degree}"
            )

    @classmethod
    def from_cycle_lengths(cls, degree: int, lengths: Iterable[int]) -> "CycleType":
        alpha = [0] * degree
        for length in lengths:
            if not 1 <= length <= degree:
                raise InvariantViolationError(
                    f"cycle length {length} outside 1..{degree}"
                )
            alpha[length - 1] += 1
        return cls(degree, tuple(alpha))

    def cycle_lengths(self) -> tuple[int, ...]:
        """Cycle lengths in non-increasing order (a partition of the degree)."""
        out: list[int] = []
        for length in range(self.degree, 0, -1):
            out.extend([length] * self.alpha[length - 1])
        return tuple(out)

    def count(self, length: int) -> int:
        """Number of cycles of the given length."""
        return self.alpha[length - 1]

    def __str__(self) -> str:
        return format_alpha(self)


_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def format_alpha(t: CycleType) -> str:
    """Sparse rendering of a cycle type, e.g. ``α₁=3 α₃=1``."""
    parts = [
        f"α{str(i).translate(_SUBSCRIPTS)}={a}"
        for i, a in enumerate(t.alpha, start=1)
        if a > 0
    ]
    return " ".join(parts)


def identity(n: int) -> Permutation:
    """The identity of S_n, the two-sided unit for compose().

    >>> str(identity(3))
    '[1,2,3]'
    """
    if n < 1:
        raise InvalidDegreeError("degree 0 is not admitted; degrees start at 1")
    return Permutation(tuple(range(1, n + 1)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Right-to-left product: the result applies q first, then p.

    >>> str(compose(parse_cycles("(12)(3)"), parse_cycles("(13)(2)")))
    '[3,1,2]'
    """
    if p.degree != q.degree:
        raise DegreeMismatchError(
            f"cannot compose degree {p.degree} with degree {q.degree}"
        )
    return Permutation(tuple(p.image[x - 1] for x in q.image))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.image, start=1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def cycle_decomposition(p: Permutation) -> list[Cycle]:
    """Disjoint cycles of p, ordered by smallest point, 1-cycles kept.

    >>> [str(c) for c in cycle_decomposition(Permutation((1, 4, 3, 6, 5, 2)))]
    ['(1)', '(246)', '(3)', '(5)']
    """
    n = p.degree
    seen = [False] * (n + 1)
    cycles: list[Cycle] = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        pts = []
        x = start
        while not seen[x]:
            seen[x] = True
            pts.append(x)
            x = p.image[x - 1]
        cycles.append(Cycle(tuple(pts)))
    return cycles


def cycle_type(p: Permutation) -> CycleType:
    """The vector counting i-cycles of p."""
    return CycleType.from_cycle_lengths(
        p.degree, (c.length for c in cycle_decomposition(p))
    )


def fixed_points(p: Permutation) -> frozenset[int]:
    """The points i with p(i) = i; its size equals alpha_1."""
    return frozenset(i for i, x in enumerate(p.image, start=1) if x == i)


def from_cycles(
    cycles: Iterable[Cycle | Sequence[int]], degree: int | None = None
) -> Permutation:
    """Rebuild a permutation from disjoint cycles.

    Points absent from every cycle are fixed.  When ``degree`` is omitted it
    is the largest point mentioned.
    """
    cycle_list = [c.points if isinstance(c, Cycle) else tuple(c) for c in cycles]
    mentioned = [x for c in cycle_list for x in c]
    if not mentioned and degree is None:
        raise InvalidDegreeError("cannot infer a degree from an empty cycle list")
    if len(set(mentioned)) != len(mentioned):
        raise InvariantViolationError("cycles are not disjoint")
    n = degree if degree is not None else max(mentioned)
    image = list(range(1, n + 1))
    for pts in cycle_list:
        for x in pts:
            if not 1 <= x <= n:
                raise InvariantViolationError(f"point {x} outside 1..{n}")
        for i, x in enumerate(pts):
            image[x - 1] = pts[(i + 1) % len(pts)]
    return Permutation(tuple(image))


# -- textual round-trip formats ----------------------------------------------

def format_one_line(p: Permutation) -> str:
    """Bit-stable one-line form, e.g. ``[1,4,3,6,5,2]``."""
    return "[" + ",".join(str(x) for x in p.image) + "]"


def format_cycles(p: Permutation) -> str:
    """Bit-stable cycle form, e.g. ``(1)(3)(5)(246)``.

    The textual convention puts short cycles first (fixed points lead), ties
    broken by smallest point; cycle_decomposition itself stays ordered by
    smallest point.  Points are concatenated digit-wise up to degree 9; past
    that each cycle is comma-separated, since ``(246)`` would be ambiguous.
    """
    cycles = sorted(cycle_decomposition(p), key=lambda c: (c.length, c.points[0]))
    return "".join(str(c) for c in cycles)


def parse_one_line(text: str) -> Permutation:
    """Parse ``[1,4,3,6,5,2]`` (spaces after commas tolerated)."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise InvariantViolationError(f"one-line form must look like [1,2,3]: {text!r}")
    items = [s.strip() for s in body[1:-1].split(",") if s.strip()]
    if not items:
        raise InvalidDegreeError("empty one-line form has no degree")
    try:
        image = tuple(int(s) for s in items)
    except ValueError:
        raise InvariantViolationError(f"non-integer point in {text!r}") from None
    return Permutation(image)


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle form such as ``(1)(3)(5)(246)`` or ``(2,4,6)(10)``.

    Inside one pair of parentheses, points may be comma- or space-separated;
    a bare digit run like ``246`` means the single-digit points 2, 4, 6.
    The degree defaults to the largest point mentioned, which matches the
    canonical form (every 1-cycle printed).
    """
    body = text.strip()
    if not body:
        raise InvalidDegreeError("empty cycle form has no degree")
    if not (body.startswith("(") and body.endswith(")")):
        raise InvariantViolationError(f"cycle form must look like (1)(23): {text!r}")
    chunks = body[1:-1].split(")(")
    cycles: list[tuple[int, ...]] = []
    for chunk in chunks:
        chunk = chunk.strip()
        if not chunk:
            raise InvariantViolationError(f"empty cycle in {text!r}")
        if "," in chunk or " " in chunk:
            pts = tuple(int(s) for s in chunk.replace(",", " ").split())
        elif chunk.isdigit():
            pts = tuple(int(ch) for ch in chunk)
        else:
            raise InvariantViolationError(f"unreadable cycle {chunk!r} in {text!r}")
        cycles.append(pts)
    return from_cycles(cycles, degree=degree)


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Accept either textual form, chosen by the leading bracket."""
    body = text.strip()
    if body.startswith("["):
        return parse_one_line(body)
    if body.startswith("("):
        return parse_cycles(body, degree=degree)
    raise InvariantViolationError(
        f"expected [one-line] or (cycle) notation, got {text!r}"
    )


# -- symbolic points -----------------------------------------------------------

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def point_to_symbol(point: int) -> str:
    """1 -> 'a', 2 -> 'b', ... (letters run out past 26)."""
    if not 1 <= point <= len(_ALPHABET):
        raise InvariantViolationError(f"no letter for point {point}; use numbers")
    return _ALPHABET[point - 1]


def symbol_to_point(symbol: str) -> int:
    """'a' -> 1, 'b' -> 2, ...; numeric strings pass through."""
    s = symbol.strip().lower()
    if s.isdigit():
        return int(s)
    if len(s) == 1 and s in _ALPHABET:
        return _ALPHABET.index(s) + 1
    raise InvariantViolationError(f"unknown symbol {symbol!r}")
