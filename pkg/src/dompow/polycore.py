"""Dense polynomials with exact integer coefficients.

A polynomial a_0 + a_1 x + ... + a_d x^d is stored as the tuple
(a_0, a_1, ..., a_d) of Python ints. The last stored coefficient is
nonzero; the zero polynomial is the empty tuple and has degree -inf.
Coefficients may be negative at this layer.
"""

from __future__ import annotations

import math
from itertools import zip_longest
from typing import Iterable, Sequence

NEG_INF = float("-inf")


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class IntPolynomial:
    """Immutable dense polynomial over the integers.

    Supports +, -, * (with polynomials or ints), equality, hashing and
    indexing by degree (coefficients beyond the degree read as 0).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def shift(self, k: int = 1) -> IntPolynomial:
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError("negative degree")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_sub(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(a):
    if isinstance(a, IntPolynomial):
        return a
    if isinstance(a, int):
        return IntPolynomial((a,))
    return NotImplemented


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(a + b for a, b in zip_longest(p.coeffs, q.coeffs, fillvalue=0))


def poly_sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(a - b for a, b in zip_longest(p.coeffs, q.coeffs, fillvalue=0))


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Schoolbook product; every product in this package has a factor of degree <= 1."""
    if not p.coeffs or not q.coeffs:
        return ZERO
    if len(p.coeffs) < len(q.coeffs):
        p, q = q, p
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for j, b in enumerate(q.coeffs):
        if b == 0:
            continue
        for i, a in enumerate(p.coeffs):
            out[i + j] += a * b
    return IntPolynomial(out)


def binomial_expand(n: int) -> IntPolynomial:
    """Return (1 + x)**n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return IntPolynomial(math.comb(n, k) for k in range(n + 1))


def eval_at_one(p: IntPolynomial) -> int:
    return sum(p.coeffs)
