"""Exact lettericity.

Two independent routes decide whether a graph has a letter partition over a
given decoder:

* :func:`find_letter_partition` enumerates letter assignments vertex by
  vertex, pruning on the pairwise conditions and testing acyclicity of the
  compatibility graph at the leaves;
* :func:`dp_recognize` sweeps a vertex order and keeps one partial letter
  partition per equivalence key (block signatures plus the projected set of
  compatibility paths), which is enough to decide every extension.

Lettericity is the least ``k`` for which some ``k``-letter decoder works.
Decoders with twin letters are skipped: they are equivalent to a decoder on
fewer letters, which was already tried.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from .decoder import MAX_K, Decoder, enumerate_decoders, is_twin_free
from .graph import Graph, bits, check_cap, delete_vertex
from .rankwidth import linear_rankwidth_exact
from .realisation import (
    Realisation,
    _compatibility_rows,
    _is_acyclic,
    partition_failure,
    realise_from_partition,
    word_of,
)

BRUTE_MAX_N = 10
Order = Union[str, Sequence[int], None]


@dataclass(frozen=True)
class Signature:
    """Outside vertices with a neighbour in ``X`` and with a non-neighbour in ``X``.

    Two subsets of ``B`` are interchangeable for the rest of the graph, in
    ``G`` and in its complement at once, exactly when their signatures agree.
    """

    touched: int
    missed: int


def set_signature(g: Graph, b: int, x: int) -> Signature:
    if x & ~b:
        raise ValueError("X must be a subset of B")
    outside = g.full & ~b
    touched = missed = 0
    for v in bits(x):
        touched |= g.adj[v]
        missed |= ~g.adj[v]
    return Signature(touched & outside, missed & outside)


def _reach(out: Sequence[int], ground: int) -> dict[int, int]:
    """Vertices reachable from each vertex of ``ground``, itself included."""
    reach = {}
    for s in bits(ground):
        seen = frontier = 1 << s
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = out[v] & ground & ~seen
            seen |= new
            frontier |= new
        reach[s] = seen
    return reach


def paths_set(g: Graph, b: int, d: Decoder, blocks: Sequence[int]) -> frozenset:
    """Tuples ``(i, j, T, T')`` such that the compatibility graph of ``G[B]`` has a
    path (possibly of length 0) from a letter-``i`` vertex of twin class ``T`` to
    a letter-``j`` vertex of twin class ``T'``.

    Twin classes w.r.t. ``B`` are named by their outside neighbourhood.
    """
    ground = 0
    for block in blocks:
        ground |= block
    if ground != b:
        raise ValueError("blocks must partition B")
    outside = g.full & ~b
    letter = {}
    for a, block in enumerate(blocks):
        for v in bits(block):
            letter[v] = a
    out = _compatibility_rows(g, d, blocks)
    tuples = set()
    for x, reachable in _reach(out, b).items():
        tx = g.adj[x] & outside
        for y in bits(reachable):
            tuples.add((letter[x], letter[y], tx, g.adj[y] & outside))
    return frozenset(tuples)


def _state_key(g: Graph, prefix: int, d: Decoder, blocks: Sequence[int]):
    sigs = tuple(set_signature(g, prefix, block) for block in blocks)
    return sigs, paths_set(g, prefix, d, blocks)


def resolve_order(g: Graph, order: Order) -> list[int]:
    if order is None or order == "natural":
        return list(range(g.n))
    if order == "lrw":
        return linear_rankwidth_exact(g)[1]
    if isinstance(order, str):
        raise ValueError(f"unknown order {order!r}")
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must list every vertex exactly once")
    return order


@dataclass
class DPStep:
    """Table statistics after placing the vertices of ``prefix``."""

    prefix: int
    states: int
    block_signatures: frozenset


def dp_recognize(g: Graph, order: Order, d: Decoder,
                 trace: Optional[list] = None) -> Optional[list[int]]:
    """A letter partition of ``g`` over ``d`` found by the prefix DP, or ``None``.

    Each table maps a key to the first partial partition that produced it.
    Extensions are kept only if they are letter partitions of the grown prefix.
    """
    seq = resolve_order(g, order)
    k = d.k
    table = {None: (0,) * k}
    prefix = 0
    for x in seq:
        prefix |= 1 << x
        grown: dict = {}
        for blocks in table.values():
            for j in range(k):
                ext = blocks[:j] + (blocks[j] | (1 << x),) + blocks[j + 1:]
                if partition_failure(g, d, ext, want_witness=False) is not None:
                    continue
                key = _state_key(g, prefix, d, ext)
                if key not in grown:
                    grown[key] = ext
        table = grown
        if trace is not None:
            sigs = frozenset(s for key in table for s in key[0])
            trace.append(DPStep(prefix, len(table), sigs))
        if not table:
            return None
    return list(next(iter(table.values())))


def find_letter_partition(g: Graph, d: Decoder) -> Optional[list[int]]:
    """Depth-first search over assignments ``V -> letters``.

    C1-C3 are pairwise conditions and are checked as each vertex is placed;
    C4 is checked once per complete assignment.
    """
    k = d.k
    # letters whose blocks must be fully joined / fully non-joined to letter a
    joined = [sum(1 << b for b in range(k) if d.has_arc(a, b) and d.has_arc(b, a))
              for a in range(k)]
    apart = [sum(1 << b for b in range(k) if not d.has_arc(a, b) and not d.has_arc(b, a))
             for a in range(k)]
    blocks = [0] * k
    n = g.n

    def members(letters: int) -> int:
        m = 0
        for b in bits(letters):
            m |= blocks[b]
        return m

    def place(v: int) -> bool:
        if v == n:
            return _is_acyclic(_compatibility_rows(g, d, blocks), g.full)
        nbrs = g.adj[v]
        for a in range(k):
            if members(joined[a]) & ~nbrs or members(apart[a]) & nbrs:
                continue
            blocks[a] |= 1 << v
            if place(v + 1):
                return True
            blocks[a] &= ~(1 << v)
        return False

    return list(blocks) if place(0) else None


@lru_cache(maxsize=None)
def candidate_decoders(k: int) -> tuple[Decoder, ...]:
    """Twin-free decoders on ``k`` letters up to isomorphism, in code order."""
    found = enumerate_decoders(k, up_to_iso=True)
    return tuple(found) if k == 1 else tuple(d for d in found if is_twin_free(d))


@dataclass(frozen=True)
class Certificate:
    """A ``k``-letter realisation witnessing lettericity ``k``."""

    k: int
    decoder: Optional[Decoder]
    realisation: Realisation

    @property
    def word(self) -> tuple[int, ...]:
        return word_of(self.realisation)


def _brute_task(args):
    g, d = args
    return find_letter_partition(g, d)


def _dp_task(args):
    g, order, d = args
    return dp_recognize(g, order, d)


def _first_success(tasks, fn, jobs: int):
    if jobs <= 1 or len(tasks) < 2:
        for i, task in enumerate(tasks):
            found = fn(task)
            if found is not None:
                return i, found
        return None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for i, found in enumerate(pool.map(fn, tasks, chunksize=8)):
            if found is not None:
                return i, found
    return None


def _default_max_k(g: Graph, max_k: Optional[int]) -> int:
    return min(max_k if max_k is not None else g.n, MAX_K)


def _search(g: Graph, max_k: Optional[int], make_task, fn, jobs: int) -> Optional[Certificate]:
    if g.n == 0:
        return Certificate(0, None, Realisation((), ()))
    for k in range(1, _default_max_k(g, max_k) + 1):
        decoders = candidate_decoders(k)
        hit = _first_success([make_task(d) for d in decoders], fn, jobs)
        if hit is not None:
            i, blocks = hit
            d = decoders[i]
            return Certificate(k, d, realise_from_partition(g, d, blocks))
    return None


def lettericity_brute(g: Graph, max_k: Optional[int] = None, jobs: int = 1) -> Optional[Certificate]:
    """Least-``k`` certificate by assignment enumeration; ``None`` if above ``max_k``."""
    check_cap(g.n, BRUTE_MAX_N, "lettericity_brute")
    return _search(g, max_k, lambda d: (g, d), _brute_task, jobs)


def lettericity_dp(g: Graph, order: Order = None, max_k: Optional[int] = None,
                   jobs: int = 1) -> Optional[Certificate]:
    """Least-``k`` certificate by the prefix DP; same contract as :func:`lettericity_brute`."""
    seq = resolve_order(g, order)
    return _search(g, max_k, lambda d: (g, seq, d), _dp_task, jobs)


def lettericity(g: Graph, method: str = "brute", max_k: Optional[int] = None,
                order: Order = None, jobs: int = 1) -> Optional[int]:
    """Lettericity of ``g`` (0 for the empty graph), or ``None`` if above ``max_k``."""
    if method == "brute":
        cert = lettericity_brute(g, max_k, jobs)
    elif method == "dp":
        cert = lettericity_dp(g, order, max_k, jobs)
    else:
        raise ValueError(f"unknown method {method!r}")
    return None if cert is None else cert.k


def deletion_values(g: Graph, method: str = "brute", max_k: Optional[int] = None) -> list:
    return [lettericity(delete_vertex(g, v), method, max_k) for v in range(g.n)]


def is_critical(g: Graph, method: str = "brute") -> bool:
    """Every one-vertex deletion has strictly smaller lettericity.

    Lettericity is monotone under induced subgraphs, so single deletions
    cover every proper induced subgraph. The empty graph has lettericity 0,
    which makes ``K1`` critical.
    """
    value = lettericity(g, method)
    return all(v < value for v in deletion_values(g, method))


def default_jobs() -> int:
    return os.cpu_count() or 1
