"""Subword and factor statistics of words, and the critical-graph factor bound."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .graph import Graph, bits


class BoundViolation(AssertionError):
    """A proven inequality failed: the implementation is wrong, not the maths."""


def inter(word: Sequence[int], a: int, b: int) -> int:
    """Largest ``t`` such that ``(ab)^t`` is a subword of ``word``."""
    if a == b:
        raise ValueError("inter needs two distinct letters")
    count = 0
    want = a
    for x in word:
        if x == want:
            if want == b:
                count += 1
            want = b if want == a else a
    return count


def interlace(word: Sequence[int], a: int, b: int) -> bool:
    """``abab`` or ``baba`` is a subword."""
    return max(inter(word, a, b), inter(word, b, a)) >= 2


def longest_sparse_factor(word: Sequence[int], t: int) -> tuple[int, int, int]:
    """Longest factor with at most ``t`` distinct letters, as ``(length, start, end)``.

    ``end`` is exclusive; the leftmost factor wins ties.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    counts: dict[int, int] = {}
    best = (0, 0, 0)
    lo = 0
    for hi, x in enumerate(word):
        counts[x] = counts.get(x, 0) + 1
        while len(counts) > t:
            y = word[lo]
            counts[y] -= 1
            if not counts[y]:
                del counts[y]
            lo += 1
        if hi + 1 - lo > best[0]:
            best = (hi + 1 - lo, lo, hi + 1)
    return best


def check_pair_homogeneous(g: Graph, a: int, b: int) -> bool:
    """``G[A, B]`` is complete bipartite or edgeless."""
    if a & b:
        raise ValueError("sides must be disjoint")
    touched = [g.adj[x] & b for x in bits(a)]
    return all(m == 0 for m in touched) or all(m == b for m in touched)


@lru_cache(maxsize=None)
def bound_f(k: int, t: int) -> int:
    """Inclusive upper bound on the length of a factor using at most ``t`` letters
    in any word realisation of a critical ``k``-letter graph.

    ``bound_f(k, 1) = 3`` and
    ``bound_f(k, t) = (2^(t-1) + 1) (k-1)^t t (bound_f(k, t-1) + 1) - 1``.
    """
    if not 1 <= t <= k:
        raise ValueError(f"need 1 <= t <= k, got t={t}, k={k}")
    if t == 1:
        return 3
    return (2 ** (t - 1) + 1) * (k - 1) ** t * t * (bound_f(k, t - 1) + 1) - 1


def z_separates_ys(word: Sequence[int], y: int, z: int) -> bool:
    """Some ``z`` lies between every two consecutive occurrences of ``y``."""
    last_y = None
    z_since = False
    for x in word:
        if x == y:
            if last_y is not None and not z_since:
                return False
            last_y, z_since = True, False
        elif x == z:
            z_since = True
    return True


def check_separator_bound(word: Sequence[int], x: int, y: int, z: int) -> bool:
    """If every two ``y`` are separated by a ``z``, require
    ``inter(x, z) >= inter(x, y) // 2``.

    Returns whether the hypothesis held; raises :class:`BoundViolation` if the
    inequality fails under it.
    """
    if len({x, y, z}) != 3:
        raise ValueError("x, y, z must be pairwise distinct")
    if not z_separates_ys(word, y, z):
        return False
    lhs, rhs = inter(word, x, z), inter(word, x, y) // 2
    if lhs < rhs:
        raise BoundViolation(f"inter(x,z)={lhs} < inter(x,y)//2={rhs} in {list(word)}")
    return True


@dataclass(frozen=True)
class FactorStats:
    """``longest[t-1]``: longest factor with at most ``t`` letters.
    ``inter[(a, b)]``: interlacing count for each ordered pair of used letters."""

    longest: tuple[int, ...]
    inter: dict[tuple[int, int], int]


def factor_stats(word: Sequence[int]) -> FactorStats:
    letters = sorted(set(word))
    longest = tuple(longest_sparse_factor(word, t)[0] for t in range(1, len(letters) + 1))
    table = {(a, b): inter(word, a, b) for a in letters for b in letters if a != b}
    return FactorStats(longest, table)
