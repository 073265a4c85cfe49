"""Brute-force domination counts for small graphs.

Every vertex subset is enumerated as an integer mask. The closed
neighbourhood union of each mask is built by a doubling table: for the
masks in [2^i, 2^(i+1)) the union is the union for the mask with bit i
cleared, OR-ed with the closed neighbourhood of vertex i. Masks are
walked in increasing integer order in blocks of 2^LOW_BITS.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dompoly import Family, GraphSpec
from .polycore import IntPolynomial

MAX_VERTICES = 26
LOW_BITS = 16


@dataclass(frozen=True)
class SmallGraph:
    """Graph on vertices 0..n-1; adjacency[i] has bit j set iff i ~ j."""

    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"SmallGraph supports 0..{MAX_VERTICES} vertices, got {self.n}")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must have one mask per vertex")
        for i, row in enumerate(self.adjacency):
            if row >> self.n:
                raise ValueError(f"vertex {i} has a neighbour outside the graph")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in range(self.n):
                if (row >> j & 1) != (self.adjacency[j] >> i & 1):
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @property
    def closed_adjacency(self) -> tuple[int, ...]:
        return tuple(row | 1 << i for i, row in enumerate(self.adjacency))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self.adjacency[i] >> j & 1]

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adjacency)


def complete_graph(n: int) -> SmallGraph:
    full = (1 << n) - 1
    return SmallGraph(n, tuple(full ^ 1 << i for i in range(n)))


def build_power_graph(spec: GraphSpec) -> SmallGraph:
    """Adjacency masks of P_n^ell or C_n^ell (vertex i is the (i+1)th path/cycle vertex)."""
    n, ell = spec.n, spec.ell
    if n > MAX_VERTICES:
        raise ValueError(f"brute force is capped at {MAX_VERTICES} vertices, got n={n}")
    rows = []
    for i in range(n):
        row = 0
        for j in range(n):
            d = abs(i - j)
            if spec.family is Family.CYCLE:
                d = min(d, n - d)
            if 0 < d <= ell:
                row |= 1 << j
        rows.append(row)
    return SmallGraph(n, tuple(rows))


def _tally(g: SmallGraph, target: int) -> IntPolynomial:
    n = g.n
    closed = g.closed_adjacency
    low = min(n, LOW_BITS)
    cover = np.zeros(1, dtype=np.uint32)
    size = np.zeros(1, dtype=np.int64)
    for i in range(low):
        cover = np.concatenate([cover, cover | np.uint32(closed[i])])
        size = np.concatenate([size, size + 1])

    counts = np.zeros(n + 1, dtype=np.int64)
    target32 = np.uint32(target)
    for high in range(1 << (n - low)):
        high_cover = 0
        for i in range(low, n):
            if high >> (i - low) & 1:
                high_cover |= closed[i]
        hits = ((cover | np.uint32(high_cover)) & target32) == target32
        shift = (high << low).bit_count()
        counts[shift:shift + low + 1] += np.bincount(size[hits], minlength=low + 1)[:low + 1]
    return IntPolynomial(int(c) for c in counts)


def brute_domination_poly(g: SmallGraph) -> IntPolynomial:
    """Count dominating sets of g by size. The empty graph gives 1."""
    return _tally(g, (1 << g.n) - 1)


def brute_relaxed_domination_poly(g: SmallGraph, exempt_prefix: int) -> IntPolynomial:
    """Count subsets dominating every vertex with index >= exempt_prefix."""
    if not 0 <= exempt_prefix <= g.n:
        raise ValueError("exempt_prefix must lie in [0, n]")
    target = ((1 << g.n) - 1) ^ ((1 << exempt_prefix) - 1)
    return _tally(g, target)
