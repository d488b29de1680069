"""Undirected simple graphs stored as adjacency bit-rows.

Vertices are ``0..n-1``; a vertex set is a plain ``int`` whose bit ``v`` marks
membership of ``v``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_N = 24
CANONICAL_MAX_N = 10
# above this, permutation tables get too large to vectorise
VECTOR_MAX_N = 8


class GraphFormatError(ValueError):
    """Malformed graph text (edge list or graph6)."""


class SizeCapError(ValueError):
    """Input exceeds a size cap of the exhaustive routines."""


def size_cap(default: int) -> int:
    """Return ``default`` unless ``LETTERKIT_MAX_N`` overrides it."""
    override = os.environ.get("LETTERKIT_MAX_N")
    if override:
        return int(override)
    return default


def check_cap(n: int, default: int, what: str) -> None:
    cap = size_cap(default)
    if n > cap:
        raise SizeCapError(f"{what}: n={n} exceeds cap {cap} (set LETTERKIT_MAX_N to override)")


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex set in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count differs from n")
        check_cap(self.n, MAX_N, "graph")
        for v, row in enumerate(self.adj):
            if row >> self.n or (row >> v) & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for u in bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# standard families, handy for tests and examples

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = tuple(row << g.n for row in h.adj)
    return Graph(g.n + h.n, g.adj + shifted)


# text formats

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: ``n`` on the first line, then ``u v`` lines.

    ``#`` starts a comment; blank lines are skipped; duplicate edges are fine.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise GraphFormatError("missing vertex count")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected vertex count, got {head!r}") from None
    if n < 0:
        raise GraphFormatError(f"line {lineno}: negative vertex count")
    check_cap(n, MAX_N, "graph")
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [str(g.n)]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def parse_graph6(line: str) -> Graph:
    """Decode a single graph6 line (n <= 62)."""
    data = line.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] in ":&":
        raise GraphFormatError("sparse6/digraph6 headers are not supported")
    if any(not 63 <= ord(ch) <= 126 for ch in data):
        raise GraphFormatError(f"invalid graph6 character in {data!r}")
    n = ord(data[0]) - 63
    if n == 63:
        raise GraphFormatError("graph6 long header (n > 62) is not supported")
    check_cap(n, MAX_N, "graph")
    nbits = n * (n - 1) // 2
    body = data[1:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 length mismatch for n={n}")
    stream = 0
    for ch in body:
        stream = (stream << 6) | (ord(ch) - 63)
    pad = 6 * len(body) - nbits
    if stream & ((1 << pad) - 1):
        raise GraphFormatError("graph6 padding bits are not zero")
    stream >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (stream >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise SizeCapError("graph6 output limited to n <= 62")
    bitlist = [(g.adj[i] >> j) & 1 for j in range(1, g.n) for i in range(j)]
    bitlist.extend([0] * (-len(bitlist) % 6))
    chars = [chr(g.n + 63)]
    for i in range(0, len(bitlist), 6):
        val = 0
        for b in bitlist[i:i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


# basic operations

def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, subset: int) -> Graph:
    """``G[S]`` relabelled by increasing original index."""
    keep = list(bits(subset & g.full))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(mask_of(index[u] for u in bits(g.adj[v] & subset)))
    return Graph(len(keep), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.full & ~(1 << v))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    rows = [0] * g.n
    for v in range(g.n):
        rows[perm[v]] = mask_of(perm[u] for u in bits(g.adj[v]))
    return Graph(g.n, tuple(rows))


# twins

def twin_classes(g: Graph) -> list[int]:
    """Classes of vertices with equal neighbourhoods outside the pair.

    True and false twins are both included. Blocks are ordered by least member.
    """
    blocks: list[int] = []
    for v in range(g.n):
        for i, block in enumerate(blocks):
            u = (block & -block).bit_length() - 1
            outside = ~((1 << u) | (1 << v))
            if g.adj[u] & outside == g.adj[v] & outside:
                blocks[i] |= 1 << v
                break
        else:
            blocks.append(1 << v)
    return blocks


def outside_neighbourhood(g: Graph, subset: int, v: int) -> int:
    return g.adj[v] & g.full & ~subset


def twin_classes_wrt(g: Graph, subset: int) -> dict[int, int]:
    """Twin classes of ``subset``: members no outside vertex distinguishes.

    Returns ``{outside neighbourhood: block}``; the key is the block's
    canonical identifier. Blocks appear in order of least member.
    """
    classes: dict[int, int] = {}
    for v in bits(subset):
        key = outside_neighbourhood(g, subset, v)
        classes[key] = classes.get(key, 0) | (1 << v)
    return classes


def is_clique(g: Graph, subset: int) -> bool:
    return all(subset & ~(1 << v) & ~g.adj[v] == 0 for v in bits(subset))


def is_independent(g: Graph, subset: int) -> bool:
    return all(g.adj[v] & subset == 0 for v in bits(subset))


def is_chain_graph(g: Graph, x: int, y: int) -> bool:
    """True iff the neighbourhoods of ``x`` into ``y`` are nested."""
    if x & y:
        raise ValueError("sides of a bipartite graph must be disjoint")
    hoods = sorted({g.adj[v] & y for v in bits(x)}, key=lambda m: bin(m).count("1"))
    return all(a & ~b == 0 for a, b in zip(hoods, hoods[1:]))


# canonical forms

def _pair_index(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> np.ndarray:
    """For each permutation, the pair slot that each canonical slot reads from."""
    pairs = _pair_index(n)
    slot = {p: s for s, p in enumerate(pairs)}
    table = np.empty((_factorial(n), len(pairs)), dtype=np.int16)
    for r, perm in enumerate(itertools.permutations(range(n))):
        for s, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            table[r, s] = slot[(a, b) if a < b else (b, a)]
    return table


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _best_code(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Least upper-triangle bit string over all relabellings, with its permutation."""
    n = g.n
    pairs = _pair_index(n)
    if not pairs:
        return 0, tuple(range(n))
    edge_bits = np.array([(g.adj[i] >> j) & 1 for i, j in pairs], dtype=np.uint64)
    weights = np.array([1 << (len(pairs) - 1 - s) for s in range(len(pairs))], dtype=np.uint64)
    if n <= VECTOR_MAX_N:
        codes = edge_bits[_perm_tables(n)] @ weights
        r = int(np.argmin(codes))
        perm = next(itertools.islice(itertools.permutations(range(n)), r, None))
        return int(codes[r]), perm
    best = None
    best_perm: tuple[int, ...] = ()
    for perm in itertools.permutations(range(n)):
        code = 0
        for i, j in pairs:
            code = (code << 1) | ((g.adj[perm[i]] >> perm[j]) & 1)
        if best is None or code < best:
            best, best_perm = code, perm
    return best, best_perm


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: ``n`` then the least adjacency bit string.

    Brute force over all ``n!`` relabellings; ``n`` is capped at 10.
    """
    check_cap(g.n, CANONICAL_MAX_N, "canonical_form")
    code, _ = _best_code(g)
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + code.to_bytes((nbits + 7) // 8, "big")


def canonical_graph(g: Graph) -> Graph:
    """The relabelling of ``g`` that attains the canonical form."""
    check_cap(g.n, CANONICAL_MAX_N, "canonical_graph")
    _, perm = _best_code(g)
    # canonical slot (i, j) reads original pair (perm[i], perm[j])
    inverse = [0] * g.n
    for new, old in enumerate(perm):
        inverse[old] = new
    return relabel(g, inverse)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and sorted(map(g.degree, range(g.n))) == sorted(
        map(h.degree, range(h.n))) and canonical_form(g) == canonical_form(h)


def contains_induced(host: Graph, pattern: Graph) -> bool:
    """Whether ``pattern`` is isomorphic to an induced subgraph of ``host``."""
    if pattern.n > host.n:
        return False
    target = canonical_form(pattern)
    for subset in itertools.combinations(range(host.n), pattern.n):
        if canonical_form(induced_subgraph(host, mask_of(subset))) == target:
            return True
    return False
