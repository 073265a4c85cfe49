import math
import random

import pytest

from dompow.dompoly import Family, GraphSpec
from dompow.oracle import (
    SmallGraph,
    brute_domination_poly,
    brute_relaxed_domination_poly,
    build_power_graph,
    complete_graph,
)
from dompow.polycore import IntPolynomial, binomial_expand


def test_path_power_graph():
    g = build_power_graph(GraphSpec(Family.PATH, 4, 2))
    assert g.edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    assert g.degrees() == (2, 3, 3, 2)


def test_cycle_power_graph():
    assert build_power_graph(GraphSpec(Family.CYCLE, 5, 2)) == complete_graph(5)
    assert build_power_graph(GraphSpec(Family.CYCLE, 2, 1)) == complete_graph(2)
    c1 = build_power_graph(GraphSpec(Family.CYCLE, 1, 3))
    assert c1.adjacency == (0,)


def test_size_cap():
    with pytest.raises(ValueError):
        build_power_graph(GraphSpec(Family.PATH, 27, 1))
    with pytest.raises(ValueError):
        SmallGraph(27, (0,) * 27)


def test_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        SmallGraph(2, (0b10, 0))
    with pytest.raises(ValueError):
        SmallGraph(1, (0b1,))


def test_brute_examples():
    assert brute_domination_poly(build_power_graph(GraphSpec("path", 3, 1))) == IntPolynomial([0, 1, 3, 1])
    assert brute_domination_poly(SmallGraph(0, ())) == IntPolynomial([1])
    for n in range(1, 9):
        assert brute_domination_poly(complete_graph(n)) == binomial_expand(n) - 1


def test_relaxed_examples():
    p2 = build_power_graph(GraphSpec("path", 2, 1))
    p3 = build_power_graph(GraphSpec("path", 3, 1))
    assert brute_relaxed_domination_poly(p2, 1) == IntPolynomial([0, 2, 1])
    assert brute_relaxed_domination_poly(p3, 1) == IntPolynomial([0, 2, 3, 1])
    for g in (p2, p3, build_power_graph(GraphSpec("cycle", 7, 2))):
        assert brute_relaxed_domination_poly(g, g.n) == binomial_expand(g.n)
    with pytest.raises(ValueError):
        brute_relaxed_domination_poly(p2, 3)


@pytest.mark.parametrize("family", ["path", "cycle"])
def test_against_naive(family, naive):
    for n in range(0, 10):
        for ell in range(1, max(n, 1) + 1):
            g = build_power_graph(GraphSpec(family, n, ell))
            got = brute_domination_poly(g)
            assert list(got) == naive(n, ell, cycle=family == "cycle"), (n, ell)
            assert brute_domination_poly(g) == brute_relaxed_domination_poly(g, 0)


def test_relaxed_against_naive(naive):
    for n in range(0, 10):
        for ell in range(1, 5):
            g = build_power_graph(GraphSpec("path", n, ell))
            for exempt in range(n + 1):
                assert list(brute_relaxed_domination_poly(g, exempt)) == naive(n, ell, exempt=exempt)


def test_crosses_block_boundary(naive):
    # n > LOW_BITS exercises the high-bit loop
    g = build_power_graph(GraphSpec("cycle", 18, 3))
    p = brute_domination_poly(g)
    for k in range(len(p)):
        assert p[k] <= math.comb(18, k)
    assert p[18] == 1 and p[17] == 18


def _random_graph(rng, n):
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.3:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return SmallGraph(n, tuple(rows))


def test_superset_closure_sampled():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(1, 12)
        g = _random_graph(rng, n)
        closed = g.closed_adjacency
        full = (1 << n) - 1

        def dominates(mask):
            cov = 0
            for i in range(n):
                if mask >> i & 1:
                    cov |= closed[i]
            return cov == full

        counts = [0] * (n + 1)
        for mask in range(1 << n):
            if dominates(mask):
                counts[bin(mask).count("1")] += 1
                extra = rng.randrange(1 << n)
                assert dominates(mask | extra)
        assert list(brute_domination_poly(g)) == counts[:len(brute_domination_poly(g))]
        assert sum(counts) == sum(brute_domination_poly(g))
