"""Decoders: directed graphs with loops on the letters ``0..k-1``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

MAX_K = 8


class DecoderFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Decoder:
    """``arcs[a]`` is the bitset of letters ``b`` with ``(a, b)`` an arc."""

    k: int
    arcs: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.k <= MAX_K:
            raise ValueError(f"decoder size {self.k} outside 1..{MAX_K}")
        if len(self.arcs) != self.k or any(row >> self.k for row in self.arcs):
            raise ValueError("arc matrix must be k x k")

    @classmethod
    def from_arcs(cls, k: int, arcs) -> Decoder:
        rows = [0] * k
        for a, b in arcs:
            if not (0 <= a < k and 0 <= b < k):
                raise ValueError(f"arc ({a}, {b}) out of range")
            rows[a] |= 1 << b
        return cls(k, tuple(rows))

    @classmethod
    def from_code(cls, k: int, code: int) -> Decoder:
        """Inverse of :attr:`code`."""
        rows = []
        for a in range(k):
            row = 0
            for b in range(k):
                if (code >> (k * k - 1 - (a * k + b))) & 1:
                    row |= 1 << b
            rows.append(row)
        return cls(k, tuple(rows))

    def has_arc(self, a: int, b: int) -> bool:
        return bool((self.arcs[a] >> b) & 1)

    def arc_list(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.k) for b in range(self.k) if self.has_arc(a, b)]

    def in_arcs(self, b: int) -> int:
        return sum(1 << a for a in range(self.k) if self.has_arc(a, b))

    @property
    def code(self) -> int:
        """Row-major arc matrix read as a binary number, entry (0, 0) first.

        Comparing codes compares arc matrices lexicographically.
        """
        code = 0
        for a in range(self.k):
            for b in range(self.k):
                code = (code << 1) | self.has_arc(a, b)
        return code

    def permuted(self, perm) -> Decoder:
        """Rename letter ``a`` to ``perm[a]``."""
        return Decoder.from_arcs(self.k, [(perm[a], perm[b]) for a, b in self.arc_list()])

    def delete_letter(self, x: int) -> Decoder:
        keep = [a for a in range(self.k) if a != x]
        index = {a: i for i, a in enumerate(keep)}
        return Decoder.from_arcs(
            self.k - 1, [(index[a], index[b]) for a, b in self.arc_list() if a != x and b != x])


def parse_decoder(text: str) -> Decoder:
    """Line 1 is ``k``; each further line ``a b`` is an arc (``a == b`` is a loop)."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise DecoderFormatError("missing letter count")
    try:
        k = int(lines[0][1])
    except ValueError:
        raise DecoderFormatError(f"line {lines[0][0]}: expected letter count") from None
    if not 1 <= k <= MAX_K:
        raise DecoderFormatError(f"letter count {k} outside 1..{MAX_K}")
    arcs = []
    for lineno, line in lines[1:]:
        parts = line.split()
        try:
            a, b = (int(p) for p in parts)
        except ValueError:
            raise DecoderFormatError(f"line {lineno}: expected 'a b', got {line!r}") from None
        if not (0 <= a < k and 0 <= b < k):
            raise DecoderFormatError(f"line {lineno}: letter out of range 0..{k - 1}")
        arcs.append((a, b))
    return Decoder.from_arcs(k, arcs)


def format_decoder(d: Decoder) -> str:
    return "\n".join([str(d.k)] + [f"{a} {b}" for a, b in d.arc_list()]) + "\n"


@lru_cache(maxsize=None)
def _perm_maps(k: int) -> tuple[tuple[int, ...], ...]:
    """Per letter permutation: the code shift that row-major entry ``p`` moves to."""
    top = k * k - 1
    return tuple(
        tuple(top - (perm[a] * k + perm[b]) for a in range(k) for b in range(k))
        for perm in itertools.permutations(range(k)))


def _orbit(k: int, code: int) -> set[int]:
    top = k * k - 1
    entries = [p for p in range(k * k) if (code >> (top - p)) & 1]
    images = set()
    for shifts in _perm_maps(k):
        image = 0
        for p in entries:
            image |= 1 << shifts[p]
        images.add(image)
    return images


def canonical_code(k: int, code: int) -> int:
    """Least code over all letter permutations."""
    return min(_orbit(k, code))


def canonical_decoder(d: Decoder) -> Decoder:
    return Decoder.from_code(d.k, canonical_code(d.k, d.code))


@lru_cache(maxsize=8)
def _iso_codes(k: int) -> tuple[int, ...]:
    # the first unseen code of each orbit is its least member
    seen = bytearray(1 << (k * k))
    reps = []
    for code in range(1 << (k * k)):
        if seen[code]:
            continue
        reps.append(code)
        for image in _orbit(k, code):
            seen[image] = 1
    return tuple(reps)


def enumerate_decoders(k: int, up_to_iso: bool = False) -> Iterator[Decoder]:
    """Decoders on exactly ``k`` letters in increasing code order.

    With ``up_to_iso`` only the lexicographically least member of each
    letter-permutation class is produced.
    """
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k={k} outside 1..{MAX_K}")
    if up_to_iso:
        for code in _iso_codes(k):
            yield Decoder.from_code(k, code)
    else:
        for code in range(1 << (k * k)):
            yield Decoder.from_code(k, code)


def letter_twins(d: Decoder, a: int, b: int) -> bool:
    """Equal in- and out-neighbourhoods, loops included."""
    return d.arcs[a] == d.arcs[b] and d.in_arcs(a) == d.in_arcs(b)


def is_twin_free(d: Decoder) -> bool:
    return not any(letter_twins(d, a, b) for a, b in itertools.combinations(range(d.k), 2))


def reduce_twin_letters(d: Decoder) -> tuple[Decoder, tuple[int, ...]]:
    """Delete twin letters until none remain.

    Returns the reduced decoder and, for each original letter, the letter of
    the reduced decoder that stands in for it.
    """
    mapping = list(range(d.k))
    while True:
        pair = next(((a, b) for a, b in itertools.combinations(range(d.k), 2)
                     if letter_twins(d, a, b)), None)
        if pair is None:
            return d, tuple(mapping)
        a, b = pair
        # b is deleted, its letters fold onto a and everything above b shifts down
        mapping = [a if m == b else m - (m > b) for m in mapping]
        d = d.delete_letter(b)


def remove_twin_letters(d: Decoder) -> Decoder:
    return reduce_twin_letters(d)[0]


@dataclass(frozen=True)
class AsymmetryGraph:
    """Arc ``(a, b)`` iff ``(a, b)`` is a decoder arc and ``(b, a)`` is not."""

    k: int
    arcs: tuple[int, ...]

    def has_arc(self, a: int, b: int) -> bool:
        return bool((self.arcs[a] >> b) & 1)

    def components(self) -> list[frozenset[int]]:
        """Connected components of the underlying undirected graph."""
        und = [self.arcs[a] for a in range(self.k)]
        for a in range(self.k):
            for b in range(self.k):
                if self.has_arc(a, b):
                    und[b] |= 1 << a
        seen = 0
        out = []
        for start in range(self.k):
            if (seen >> start) & 1:
                continue
            comp, frontier = 1 << start, 1 << start
            while frontier:
                a = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                new = und[a] & ~comp
                comp |= new
                frontier |= new
            seen |= comp
            out.append(frozenset(a for a in range(self.k) if (comp >> a) & 1))
        return out


def asymmetry_graph(d: Decoder) -> AsymmetryGraph:
    rows = []
    for a in range(d.k):
        row = 0
        for b in range(d.k):
            if a != b and d.has_arc(a, b) and not d.has_arc(b, a):
                row |= 1 << b
        rows.append(row)
    return AsymmetryGraph(d.k, tuple(rows))


def letters_independent(d: Decoder, a: int, b: int) -> bool:
    """No asymmetry arc between ``a`` and ``b``: adjacency ignores their order."""
    return d.has_arc(a, b) == d.has_arc(b, a)
