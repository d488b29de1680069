"""Cut-rank over GF(2) and exact linear rank-width of small graphs."""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, bits, check_cap

LRW_MAX_N = 16


def cut_matrix(g: Graph, x: int) -> list[int]:
    """Rows of ``M_G[X, V - X]`` as bitsets over the complement of ``X``."""
    outside = g.full & ~x
    return [g.adj[v] & outside for v in bits(x)]


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank over GF(2) of bitset rows (xor basis keyed by leading bit)."""
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead not in basis:
                basis[lead] = row
                break
            row ^= basis[lead]
    return len(basis)


def cutrank(g: Graph, x: int) -> int:
    return gf2_rank(cut_matrix(g, x & g.full))


def order_width(g: Graph, order: Sequence[int]) -> int:
    """Largest cut-rank over the proper non-empty prefixes of ``order``."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must list every vertex exactly once")
    width = 0
    prefix = 0
    for v in order[:-1]:
        prefix |= 1 << v
        width = max(width, cutrank(g, prefix))
    return width


def linear_rankwidth_exact(g: Graph) -> tuple[int, list[int]]:
    """Exact linear rank-width with an optimal order, by DP over vertex subsets.

    ``best[S]`` is the least width of an order of ``S`` placed first, counting
    the cut at ``S`` itself.
    """
    check_cap(g.n, LRW_MAX_N, "linear_rankwidth_exact")
    n = g.n
    if n == 0:
        return 0, []
    size = 1 << n
    best = [0] * size
    choice = [0] * size
    for s in range(1, size):
        sub = n
        last = -1
        for v in bits(s):
            val = best[s & ~(1 << v)]
            if val < sub:
                sub, last = val, v
        best[s] = max(sub, cutrank(g, s))
        choice[s] = last
    order = []
    s = size - 1
    while s:
        v = choice[s]
        order.append(v)
        s &= ~(1 << v)
    order.reverse()
    return best[size - 1], order
