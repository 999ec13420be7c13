"""Shared helpers for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from kegraph import Graph, fixture, generate, vset


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20090001)


@pytest.fixture
def h1() -> Graph:
    return fixture("H1")


@pytest.fixture
def h3() -> Graph:
    return fixture("H3")


@pytest.fixture
def g1() -> Graph:
    return fixture("G1")


@pytest.fixture
def g2() -> Graph:
    return fixture("G2")


@pytest.fixture
def gf10() -> Graph:
    return fixture("GF10")


@pytest.fixture
def k13() -> Graph:
    return generate("star", 4)


@pytest.fixture
def c4() -> Graph:
    return generate("cycle", 4)


def independent_sets(g: Graph):
    """Yield every independent subset as a mask, smallest cardinality first.

    Test-local enumeration, deliberately naive and separate from both the
    solver and the oracle module.
    """
    for size in range(g.n + 1):
        for comb in combinations(range(g.n), size):
            s = vset(comb)
            if all(not (g.adj[v] & s) for v in comb):
                yield s


def surplus(g: Graph, s: int) -> int:
    nb = 0
    m = s
    while m:
        low = m & -m
        nb |= g.adj[low.bit_length() - 1]
        m ^= low
    return s.bit_count() - (nb & ~s).bit_count()


def critical_sets_of(g: Graph) -> list[int]:
    """All critical independent sets, brute force (test-local)."""
    sets = list(independent_sets(g))
    d = max(surplus(g, s) for s in sets)
    return [s for s in sets if surplus(g, s) == d]
