import random

from kegraph import Graph, fixture, generate
from kegraph.verify import minimize, run_suite


def test_quick_suite_clean():
    assert run_suite("quick", seed=20090001) is None


def test_minimize_shrinks_to_smallest_witness():
    # A triangle buried in a larger graph: the minimizer should strip
    # everything else away.
    g = Graph(
        7,
        [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6)],
    )

    def has_triangle(h: Graph) -> bool:
        return any(
            h.adj[u] & h.adj[v]
            for u in range(h.n)
            for v in range(u + 1, h.n)
            if h.has_edge(u, v)
        )

    assert has_triangle(g)
    shrunk = minimize(g, has_triangle)
    assert shrunk.n == 3 and shrunk.m == 3


def test_minimize_respects_size_floor():
    shrunk = minimize(fixture("H1"), lambda h: h.n >= 2)
    assert shrunk.n == 2


def test_minimize_swallows_kegraph_errors():
    from kegraph.errors import TooLargeError

    def violates(h: Graph) -> bool:
        if h.n < 5:
            raise TooLargeError("artificial")
        return True

    shrunk = minimize(generate("cycle", 6), violates)
    assert shrunk.n == 5


def test_violation_predicates_pass_on_healthy_graphs():
    from kegraph.verify import (
        _alpha_c_oracle_broken,
        _d_oracle_broken,
        _ke_chain_broken,
        _recognition_inconsistent,
        _roundtrip_broken,
    )

    rng = random.Random(7)
    from kegraph import random_graph

    for _ in range(25):
        g = random_graph(rng, rng.randint(0, 9), rng.random())
        assert not _roundtrip_broken(g)
        assert not _d_oracle_broken(g)
        assert not _alpha_c_oracle_broken(g)
        assert not _ke_chain_broken(g)
        assert not _recognition_inconsistent(g)
