"""Words, letter realisations and the compatibility-graph characterisation.

A letter partition ``(V_1, ..., V_k)`` of a graph over a decoder is
realisable exactly when

* C1/C2: a block with two or more vertices is a clique if its letter has a
  loop and an independent set otherwise;
* C3: blocks of two letters joined in both directions (or in neither) are
  completely joined (or not joined at all);
* C4: the compatibility graph is acyclic.

Any topological order of the compatibility graph then orders the vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .decoder import Decoder
from .graph import Graph, bits

Word = tuple[int, ...]


class WordFormatError(ValueError):
    pass


def parse_word(text: str, fmt: str = "auto") -> Word:
    """Parse ``'abab'`` (letters) or ``'0,1,0,1'`` (ids).

    ``fmt`` is ``"letters"``, ``"ids"`` or ``"auto"``.
    """
    text = text.strip()
    if fmt == "auto":
        fmt = "letters" if text.isalpha() else "ids"
    if fmt == "letters":
        if not all("a" <= ch <= "z" for ch in text):
            raise WordFormatError(f"letters must be in a..z: {text!r}")
        return tuple(ord(ch) - ord("a") for ch in text)
    if fmt == "ids":
        if not text:
            return ()
        try:
            word = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise WordFormatError(f"expected comma-separated letter ids: {text!r}") from None
        if any(x < 0 for x in word):
            raise WordFormatError("letter ids must be non-negative")
        return word
    raise ValueError(f"unknown word format {fmt!r}")


def format_word(word: Sequence[int], k: Optional[int] = None) -> str:
    if (k if k is not None else max(word, default=0) + 1) <= 26:
        return "".join(chr(ord("a") + x) for x in word)
    return ",".join(map(str, word))


@dataclass(frozen=True)
class Realisation:
    """Letter of each vertex and its 0-based position in the word."""

    letters: tuple[int, ...]
    positions: tuple[int, ...]

    def __post_init__(self):
        if len(self.letters) != len(self.positions):
            raise ValueError("letters and positions differ in length")
        if sorted(self.positions) != list(range(len(self.positions))):
            raise ValueError("positions must be a bijection onto 0..n-1")

    @classmethod
    def from_sequence(cls, letters: Sequence[int], sequence: Sequence[int]) -> Realisation:
        """``sequence[i]`` is the vertex at position ``i``."""
        positions = [0] * len(sequence)
        for i, v in enumerate(sequence):
            positions[v] = i
        return cls(tuple(letters), tuple(positions))

    @property
    def sequence(self) -> tuple[int, ...]:
        seq = [0] * len(self.positions)
        for v, i in enumerate(self.positions):
            seq[i] = v
        return tuple(seq)


def word_of(r: Realisation) -> Word:
    return tuple(r.letters[v] for v in r.sequence)


def identity_realisation(word: Sequence[int]) -> Realisation:
    """The realisation of ``decode_word(d, word)`` that reads the word back."""
    return Realisation(tuple(word), tuple(range(len(word))))


def decode_word(d: Decoder, word: Sequence[int]) -> Graph:
    """Positions ``i < j`` are adjacent iff ``(w_i, w_j)`` is an arc."""
    for x in word:
        if not 0 <= x < d.k:
            raise WordFormatError(f"letter {x} out of range for a {d.k}-letter decoder")
    n = len(word)
    rows = [0] * n
    for j in range(n):
        for i in range(j):
            if d.has_arc(word[i], word[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def verify_realisation(g: Graph, d: Decoder, r: Realisation) -> Optional[tuple[int, int]]:
    """``None`` if ``r`` realises ``g`` over ``d``.

    Otherwise the first vertex pair, in position order, whose adjacency
    disagrees with the decoded word.
    """
    if len(r.letters) != g.n:
        raise ValueError("realisation does not cover the vertex set")
    seq = r.sequence
    for j in range(g.n):
        y = seq[j]
        for i in range(j):
            x = seq[i]
            if d.has_arc(r.letters[x], r.letters[y]) != g.has_edge(x, y):
                return x, y
    return None


@dataclass(frozen=True)
class CompatibilityGraph:
    """Forced precedences: an arc ``(x, y)`` means ``x`` must come before ``y``."""

    n: int
    out: tuple[int, ...]

    def has_arc(self, x: int, y: int) -> bool:
        return bool((self.out[x] >> y) & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in bits(self.out[x])]

    def topological_order(self) -> Optional[list[int]]:
        """Kahn's scheme taking the lowest ready vertex; ``None`` on a cycle."""
        return _kahn(self.out, (1 << self.n) - 1)

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

    def find_circuit(self) -> Optional[list[int]]:
        return _shortest_circuit(self.out, (1 << self.n) - 1)


def _asymmetric_targets(d: Decoder) -> list[int]:
    """Per letter ``a``: letters ``b`` with ``(a, b)`` an arc and ``(b, a)`` not."""
    return [sum(1 << b for b in range(d.k)
                if b != a and d.has_arc(a, b) and not d.has_arc(b, a))
            for a in range(d.k)]


def _compatibility_rows(g: Graph, d: Decoder, blocks: Sequence[int]) -> list[int]:
    """Out-rows of the compatibility graph of ``g`` restricted to the union of ``blocks``."""
    out = [0] * g.n
    targets = _asymmetric_targets(d)
    for a, block_a in enumerate(blocks):
        for b in bits(targets[a]):
            block_b = blocks[b]
            if not block_b:
                continue
            for x in bits(block_a):
                later = g.adj[x] & block_b
                out[x] |= later
                for y in bits(block_b & ~later):
                    out[y] |= 1 << x
    return out


def build_compatibility_graph(g: Graph, d: Decoder, letters: Sequence[int]) -> CompatibilityGraph:
    blocks = [0] * d.k
    for v, a in enumerate(letters):
        blocks[a] |= 1 << v
    return CompatibilityGraph(g.n, tuple(_compatibility_rows(g, d, blocks)))


def _kahn(out: Sequence[int], ground: int) -> Optional[list[int]]:
    indeg = {v: 0 for v in bits(ground)}
    for x in bits(ground):
        for y in bits(out[x] & ground):
            indeg[y] += 1
    ready = [v for v in bits(ground) if indeg[v] == 0]
    order = []
    while ready:
        ready.sort()
        x = ready.pop(0)
        order.append(x)
        for y in bits(out[x] & ground):
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    return order if len(order) == len(indeg) else None


def _is_acyclic(out: Sequence[int], ground: int) -> bool:
    inn = {v: 0 for v in bits(ground)}
    for u in bits(ground):
        for v in bits(out[u] & ground):
            inn[v] |= 1 << u
    remaining = ground
    while remaining:
        sources = 0
        for v in bits(remaining):
            if not inn[v] & remaining:
                sources |= 1 << v
        if not sources:
            return False
        remaining &= ~sources
    return True


def _shortest_circuit(out: Sequence[int], ground: int) -> Optional[list[int]]:
    best = None
    for s in bits(ground):
        parent = {s: None}
        queue = deque([s])
        found = None
        while queue and found is None:
            x = queue.popleft()
            for y in bits(out[x] & ground):
                if y == s:
                    found = x
                    break
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        if found is not None:
            cycle = []
            node = found
            while node is not None:
                cycle.append(node)
                node = parent[node]
            cycle.reverse()
            if best is None or len(cycle) < len(best):
                best = cycle
    return best


@dataclass(frozen=True)
class PartitionFailure:
    """First violated condition (``"C1"``..``"C4"``) with a vertex-pair or circuit witness."""

    condition: str
    witness: tuple[int, ...]


def _symmetric_failure(g: Graph, d: Decoder, blocks: Sequence[int]) -> Optional[PartitionFailure]:
    for a, block in enumerate(blocks):
        if block & (block - 1) == 0:
            continue
        for x in bits(block):
            others = block & ~(1 << x) & ~((1 << (x + 1)) - 1)
            if d.has_arc(a, a):
                missing = others & ~g.adj[x]
                if missing:
                    return PartitionFailure("C1", (x, (missing & -missing).bit_length() - 1))
            else:
                present = others & g.adj[x]
                if present:
                    # a clique without a loop breaks C1 as well as C2
                    cond = "C1" if _block_is_clique(g, block) else "C2"
                    return PartitionFailure(cond, (x, (present & -present).bit_length() - 1))
    for a, block_a in enumerate(blocks):
        for b in range(a + 1, len(blocks)):
            block_b = blocks[b]
            if not (block_a and block_b) or d.has_arc(a, b) != d.has_arc(b, a):
                continue
            want_edges = d.has_arc(a, b)
            for x in bits(block_a):
                bad = block_b & (~g.adj[x] if want_edges else g.adj[x])
                if bad:
                    return PartitionFailure("C3", (x, (bad & -bad).bit_length() - 1))
    return None


def _block_is_clique(g: Graph, block: int) -> bool:
    return all(block & ~(1 << v) & ~g.adj[v] == 0 for v in bits(block))


def partition_failure(g: Graph, d: Decoder, blocks: Sequence[int],
                      want_witness: bool = True) -> Optional[PartitionFailure]:
    """C1-C4 on ``G[union of blocks]``; vertex ids are kept, not relabelled."""
    failure = _symmetric_failure(g, d, blocks)
    if failure is not None:
        return failure
    ground = 0
    for block in blocks:
        ground |= block
    out = _compatibility_rows(g, d, blocks)
    if _is_acyclic(out, ground):
        return None
    witness = tuple(_shortest_circuit(out, ground)) if want_witness else ()
    return PartitionFailure("C4", witness)


def _validate_blocks(g: Graph, d: Decoder, blocks: Sequence[int]) -> None:
    if len(blocks) != d.k:
        raise ValueError(f"expected {d.k} blocks, got {len(blocks)}")
    seen = 0
    for block in blocks:
        if block & seen:
            raise ValueError("blocks overlap")
        seen |= block
    if seen != g.full:
        raise ValueError("blocks do not cover the vertex set")


def check_letter_partition(g: Graph, d: Decoder, blocks: Sequence[int]) -> Optional[PartitionFailure]:
    """``None`` if the ordered k-tuple of vertex sets is a letter partition over ``d``.

    Blocks may be empty. Raises ``ValueError`` if they overlap or miss a vertex.
    """
    _validate_blocks(g, d, blocks)
    return partition_failure(g, d, blocks)


def letters_of(blocks: Sequence[int], n: int) -> tuple[int, ...]:
    letters = [-1] * n
    for a, block in enumerate(blocks):
        for v in bits(block):
            letters[v] = a
    return tuple(letters)


def realise_from_partition(g: Graph, d: Decoder, blocks: Sequence[int]) -> Realisation:
    """Letter partition to realisation, ordered by the lowest-id topological sort."""
    failure = check_letter_partition(g, d, blocks)
    if failure is not None:
        raise ValueError(f"not a letter partition: {failure}")
    order = _kahn(_compatibility_rows(g, d, blocks), g.full)
    assert order is not None
    return Realisation.from_sequence(letters_of(blocks, g.n), order)


def blocks_of(letters: Sequence[int], k: int) -> list[int]:
    blocks = [0] * k
    for v, a in enumerate(letters):
        blocks[a] |= 1 << v
    return blocks
