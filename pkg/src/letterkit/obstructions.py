"""Small-graph enumeration, obstructions to k-lettericity and critical graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .graph import Graph, bits, canonical_form, canonical_graph, check_cap, \
    contains_induced, delete_vertex, to_graph6, twin_classes
from .realisation import Realisation, verify_realisation, word_of
from .decoder import Decoder
from .solver import Certificate, is_critical, lettericity, lettericity_brute, lettericity_dp
from .words import bound_f, longest_sparse_factor

ENUM_MAX_N = 6


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    # every n-vertex graph is an (n-1)-vertex graph plus one vertex
    found = {}
    for base in _classes(n - 1):
        for hood in range(1 << (n - 1)):
            rows = list(base.adj)
            for u in bits(hood):
                rows[u] |= 1 << (n - 1)
            rows.append(hood)
            g = Graph(n, tuple(rows))
            key = canonical_form(g)
            if key not in found:
                found[key] = canonical_graph(g)
    return tuple(found[key] for key in sorted(found))


def enumerate_graphs(n: int, include_empty: bool = False) -> Iterator[Graph]:
    """One canonically labelled graph per isomorphism class on ``n`` vertices,
    ordered by canonical form. ``n = 0`` yields nothing unless ``include_empty``.
    """
    check_cap(n, ENUM_MAX_N, "enumerate_graphs")
    if n == 0 and not include_empty:
        return
    yield from _classes(n)


def graphs_up_to(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_graphs(n)


def _solve(g: Graph, k: int, method: str) -> Optional[Certificate]:
    if method == "brute":
        return lettericity_brute(g, max_k=k)
    return lettericity_dp(g, max_k=k)


def is_obstruction(g: Graph, k: int, method: str = "brute") -> bool:
    """Lettericity above ``k`` while every one-vertex deletion is at most ``k``."""
    if _solve(g, k, method) is not None:
        return False
    return all(_solve(delete_vertex(g, v), k, method) is not None for v in range(g.n))


@dataclass
class ObstructionReport:
    graph: Graph
    k: int
    canonical: bytes
    deletion_values: list[int]
    certificates: list[Certificate] = field(repr=False)
    lettericity: Optional[int] = None

    @property
    def graph6(self) -> str:
        return to_graph6(self.graph)

    def line(self) -> str:
        return f"g6 {self.graph6} k {self.k} verdict true"

    def json_line(self) -> str:
        return json.dumps({
            "g6": self.graph6,
            "n": self.graph.n,
            "k": self.k,
            "verdict": True,
            "lettericity": self.lettericity,
            "deletions": self.deletion_values,
        }, sort_keys=True)


def obstruction_report(g: Graph, k: int, method: str = "brute",
                       exact: bool = False) -> Optional[ObstructionReport]:
    """Report for an obstruction, ``None`` if ``g`` is not one.

    ``exact`` also records the lettericity of ``g`` itself, at most ``2k + 1``.
    """
    if _solve(g, k, method) is not None:
        return None
    certs = []
    for v in range(g.n):
        cert = _solve(delete_vertex(g, v), k, method)
        if cert is None:
            return None
        certs.append(cert)
    value = lettericity(g, method, max_k=2 * k + 1) if exact else None
    return ObstructionReport(g, k, canonical_form(g), [c.k for c in certs], certs, value)


def find_obstructions(k: int, graphs: Iterable[Graph], method: str = "brute",
                      exact: bool = False) -> list[ObstructionReport]:
    """All obstructions among ``graphs``, deduplicated, sorted by (n, canonical form)."""
    found = {}
    for g in graphs:
        key = canonical_form(g)
        if key in found:
            continue
        report = obstruction_report(canonical_graph(g), k, method, exact)
        if report is not None:
            found[key] = report
    return [found[key] for key in sorted(found, key=lambda c: (c[0], c))]


def is_minimal_family(graphs: list[Graph]) -> bool:
    """No graph of the list contains another as an induced subgraph."""
    for i, g in enumerate(graphs):
        for j, h in enumerate(graphs):
            if i != j and h.n <= g.n and contains_induced(g, h):
                return False
    return True


def check_critical_structure(g: Graph, k: int, decoder: Decoder, r: Realisation,
                             check_precondition: bool = True) -> list[str]:
    """Necessary conditions on a critical ``k``-letter graph.

    Twin classes have at most 3 vertices, and every factor of the word using
    at most ``t`` letters is at most ``bound_f(k, t)`` long. Returns the
    violations found. Raises ``ValueError`` if the realisation does not verify
    or (with ``check_precondition``) if ``g`` is not critical of lettericity ``k``.
    """
    if verify_realisation(g, decoder, r) is not None:
        raise ValueError("realisation does not verify")
    if check_precondition:
        if lettericity(g) != k or not is_critical(g):
            raise ValueError(f"graph is not a critical {k}-letter graph")
    problems = []
    for block in twin_classes(g):
        size = bin(block).count("1")
        if size > 3:
            problems.append(f"twin class {sorted(bits(block))} has size {size} > 3")
    word = word_of(r)
    for t in range(1, k + 1):
        length, start, end = longest_sparse_factor(word, t)
        if length > bound_f(k, t):
            problems.append(
                f"factor [{start}:{end}] uses <= {t} letters with length {length} > {bound_f(k, t)}")
    return problems
