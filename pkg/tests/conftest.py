from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import settings

from letterkit.graph import Graph, canonical_form, complete_graph, cycle_graph, disjoint_union, empty_graph, path_graph
from letterkit.obstructions import graphs_up_to
from letterkit.solver import lettericity_brute, lettericity_dp

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"

# large enough for every graph on at most 6 vertices
EXACT_K = 6


def k2_plus_k1() -> Graph:
    return disjoint_union(complete_graph(2), empty_graph(1))


P3 = path_graph(3)
P4 = path_graph(4)
C4 = cycle_graph(4)
C5 = cycle_graph(5)
K2K1 = k2_plus_k1()


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    """One graph per isomorphism class, 1 <= n <= 6."""
    return list(graphs_up_to(6))


@pytest.fixture(scope="session")
def brute_certs(corpus):
    return [lettericity_brute(g, max_k=EXACT_K) for g in corpus]


@pytest.fixture(scope="session")
def lettericity_of(corpus, brute_certs):
    """Exact lettericity of any graph on at most 6 vertices, via its canonical form."""
    table = {canonical_form(g): c.k for g, c in zip(corpus, brute_certs)}

    def lookup(g: Graph) -> int:
        return 0 if g.n == 0 else table[canonical_form(g)]

    return lookup


@pytest.fixture(scope="session")
def dp_certs(corpus):
    return [lettericity_dp(g, max_k=3) for g in corpus]


settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")
