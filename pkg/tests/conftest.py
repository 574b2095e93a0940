"""Shared test helpers: tiny independent oracles the tests check against.

These deliberately re-derive everything through dictionaries and raw
itertools so they share no code path with the library.
"""
import itertools

from combinatoria.perm import Permutation, compose, inverse


def as_mapping(p: Permutation) -> dict[int, int]:
    return {i: p(i) for i in range(1, p.degree + 1)}


def mapping_compose(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    """Right-to-left composition done through plain dict lookups."""
    return {i: p[q[i]] for i in q}


def all_perms(n: int):
    """Raw lexicographic S_n as one-line tuples."""
    return itertools.permutations(range(1, n + 1))


def naive_fixed_points(image: tuple[int, ...]) -> set[int]:
    return {i for i, x in enumerate(image, start=1) if x == i}


def conjugate(g: Permutation, p: Permutation) -> Permutation:
    """g p g^-1; kept out of the public API on purpose."""
    return compose(compose(g, p), inverse(g))
