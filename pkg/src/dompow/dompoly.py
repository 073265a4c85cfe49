"""Domination polynomials of path powers P_n^ell and cycle powers C_n^ell.

Several independent derivations are provided so they can be checked
against each other and against brute force:

* ``path_poly_A``: the window recurrence with its small-n corrections
  (sum of the previous 2*ell + 1 polynomials, shifted by x).
* ``path_poly_B``: the two-term recurrence
  gamma(P_n) = (1 + x) gamma(P_{n-1}) - x gamma(P_{n-2ell-2}).
* ``path_poly_via_relaxed``: through relaxed dominating sets, where the
  first ell vertices need not be dominated.
* ``cycle_poly``: the window recurrence for cycles, seeded with the
  complete-graph values (1 + x)^n - 1 for n <= 2*ell + 1.

Row generators (``path_row``, ``cycle_row``, ``relaxed_row``) yield the
polynomials for n = 0, 1, 2, ... as plain coefficient lists and keep only
the last 2*ell + 1 of them, which is what the grid scan uses.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Iterator

from .polycore import ONE, X, IntPolynomial, binomial_expand


class Family(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"


@dataclass(frozen=True)
class GraphSpec:
    family: Family
    n: int
    ell: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.ell < 1:
            raise ValueError(f"ell must be >= 1, got {self.ell}")


def _check(n: int, ell: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")


def _complete(n: int) -> list[int]:
    # (1 + x)^n - 1, or 1 for the empty graph
    if n == 0:
        return [1]
    row = [math.comb(n, k) for k in range(n + 1)]
    row[0] = 0
    return row


def _complete_rows(stop: int) -> Iterator[list[int]]:
    # (1 + x)^n - 1 for n = 1..stop-1, by Pascal's rule
    row = [1]
    for _ in range(1, stop):
        row = [a + b for a, b in zip(row + [0], [0] + row)]
        out = row[:]
        out[0] = 0
        yield out


def _window_rows(ell: int, first: Iterable[list[int]], correction) -> Iterator[list[int]]:
    """Drive f_n = x * sum_{j=1}^{2ell+1} f_{n-j} + correction(n, window_sum).

    ``first`` yields the rows that are given explicitly; afterwards each
    row is x times the running sum of the last (up to) 2*ell + 1 rows,
    adjusted by ``correction`` when it is not None.
    """
    width = 2 * ell + 1
    window: deque[list[int]] = deque()
    total: list[int] = []

    def push(row):
        if len(total) < len(row):
            total.extend([0] * (len(row) - len(total)))
        for k, c in enumerate(row):
            total[k] += c
        window.append(row)
        if len(window) > width:
            old = window.popleft()
            for k, c in enumerate(old):
                total[k] -= c

    n = 0
    for row in first:
        yield row
        push(row)
        n += 1
    while True:
        row = [0] + total
        if correction is not None:
            correction(n, row)
        yield row
        push(row)
        n += 1


def path_row(ell: int) -> Iterator[list[int]]:
    """Yield coefficient lists of gamma(P_n^ell, x) for n = 0, 1, 2, ...

    Uses A1-A5: for 2 <= n <= 2*ell the sum runs over n-1 terms only
    (P_0 excluded) and gamma_1(P_n) * x is added back.
    """
    _check(0, ell)

    def correction(n, row):
        if n <= 2 * ell:
            # window_sum includes gamma(P_0) = 1, which A3/A4 leave out
            row[1] += gamma1_path(n, ell) - 1

    return _window_rows(ell, [[1], [0, 1]], correction)


def cycle_row(ell: int) -> Iterator[list[int]]:
    """Yield coefficient lists of gamma(C_n^ell, x) for n = 0, 1, 2, ...

    The window for n >= 2*ell + 2 never reaches C_0, so C_0 is excluded
    from the running sum by seeding the window with C_1..C_{2ell+1} only.
    """
    _check(0, ell)
    yield [1]
    yield from _window_rows(ell, _complete_rows(2 * ell + 2), None)


def relaxed_base(n: int, ell: int) -> IntPolynomial:
    """gamma^r(P_n^ell, x) for 0 <= n <= 2*ell + 1, counted directly.

    Only vertices v_{ell+1}..v_n must be dominated. When n <= 2*ell + 1
    any chosen vertex lies within ell of every vertex after v_ell on the
    right, so a set fails exactly when all its vertices precede v_{n-ell}.
    That leaves (1 + x)^n - (1 + x)^(n-ell-1), the second term absent for
    n <= ell.
    """
    _check(n, ell)
    if n > 2 * ell + 1:
        raise ValueError(f"relaxed base case needs n <= 2*ell+1, got n={n}, ell={ell}")
    full = binomial_expand(n)
    if n <= ell:
        return full
    return full - binomial_expand(n - ell - 1)


def relaxed_row(ell: int) -> Iterator[list[int]]:
    """Yield gamma^r(P_n^ell, x) for n = 0, 1, 2, ...; window recurrence from n = 2*ell + 1."""
    _check(0, ell)
    return _window_rows(ell, (list(relaxed_base(n, ell).coeffs) for n in range(2 * ell + 1)), None)


def _nth(rows: Iterator[list[int]], n: int) -> IntPolynomial:
    return IntPolynomial(next(islice(rows, n, None)))


def path_poly_A(n: int, ell: int) -> IntPolynomial:
    _check(n, ell)
    if n <= ell + 1:
        return IntPolynomial(_complete(n))
    return _nth(path_row(ell), n)


def path_row_B(ell: int) -> Iterator[IntPolynomial]:
    """Yield gamma(P_n^ell, x) for n = 0, 1, 2, ... by scheme B.

    B1/B2 give (1 + x)^n - 1 up to n = ell + 1; then
    (1 + x) gamma(P_{n-1}) - x for n <= 2*ell + 1, and
    (1 + x) gamma(P_{n-1}) - x gamma(P_{n-2ell-2}) beyond.
    """
    _check(0, ell)
    lag = 2 * (ell + 1)
    hist: deque[IntPolynomial] = deque(maxlen=lag)
    one_plus_x = ONE + X
    n = 0
    while True:
        if n <= ell + 1:
            cur = IntPolynomial(_complete(n))
        elif n <= 2 * ell + 1:
            cur = one_plus_x * hist[-1] - X
        else:
            cur = one_plus_x * hist[-1] - X * hist[-lag]
        if any(c < 0 for c in cur.coeffs):
            raise ArithmeticError(f"negative coefficient in scheme B at n={n}, ell={ell}")
        yield cur
        hist.append(cur)
        n += 1


def path_poly_B(n: int, ell: int) -> IntPolynomial:
    _check(n, ell)
    return next(islice(path_row_B(ell), n, None))


def cycle_poly(n: int, ell: int) -> IntPolynomial:
    _check(n, ell)
    if n <= 2 * ell + 1:
        return IntPolynomial(_complete(n))
    return _nth(cycle_row(ell), n)


def gamma1_path(n: int, ell: int) -> int:
    """Number of single vertices dominating P_n^ell (n >= 2)."""
    _check(n, ell)
    if n < 2:
        raise ValueError(f"gamma1_path needs n >= 2, got {n}")
    if n <= ell + 1:
        return n
    if n <= 2 * ell + 1:
        return 2 * ell + 2 - n
    return 0


def relaxed_path_poly(n: int, ell: int) -> IntPolynomial:
    _check(n, ell)
    if n <= 2 * ell:
        return relaxed_base(n, ell)
    return _nth(relaxed_row(ell), n)


def path_row_via_relaxed(ell: int) -> Iterator[tuple[int, list[int]]]:
    """Yield (n, gamma(P_n^ell, x)) for n = ell+1, ell+2, ... by the relaxed route."""
    _check(0, ell)
    width = ell + 1
    window: deque[list[int]] = deque()
    total: list[int] = []
    for m, row in enumerate(relaxed_row(ell)):
        if len(total) < len(row):
            total.extend([0] * (len(row) - len(total)))
        for k, c in enumerate(row):
            total[k] += c
        window.append(row)
        if len(window) > width:
            for k, c in enumerate(window.popleft()):
                total[k] -= c
        if len(window) == width:
            yield m + 1, [0] + total


def path_poly_via_relaxed(n: int, ell: int) -> IntPolynomial:
    """gamma(P_n) = x * sum_{i=1}^{ell+1} gamma^r(P_{n-i}), valid for n >= ell + 1."""
    _check(n, ell)
    if n < ell + 1:
        raise ValueError(f"relaxed route needs n >= ell+1, got n={n}, ell={ell}")
    m, row = next(islice(path_row_via_relaxed(ell), n - ell - 1, None))
    assert m == n
    return IntPolynomial(row)


def domination_poly(spec: GraphSpec) -> IntPolynomial:
    if spec.family is Family.PATH:
        return path_poly_A(spec.n, spec.ell)
    return cycle_poly(spec.n, spec.ell)


def family_row(family: Family | str, ell: int) -> Iterator[list[int]]:
    return path_row(ell) if Family(family) is Family.PATH else cycle_row(ell)
