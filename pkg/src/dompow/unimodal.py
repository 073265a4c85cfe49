"""Unimodality, log-concavity and ultra-log-concavity verdicts, plus a
certifier for sequences of polynomials obeying f_n = x * sum_{j=1}^k f_{n-j}.

All comparisons are exact integer comparisons.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .polycore import IntPolynomial, X


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Optional[int] = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class ModeReport:
    """Outcome of ``check_unimodal``.

    When ``verdict`` holds, [mode_lo, mode_hi] is the set of indices
    attaining the maximum (None for the empty sequence). Otherwise
    ``violation_index`` is the first k with a[k] > a[k-1] after a strict fall.
    """

    verdict: bool
    mode_lo: Optional[int] = None
    mode_hi: Optional[int] = None
    violation_index: Optional[int] = None

    def __bool__(self):
        return self.verdict

    def has_mode(self, m: int) -> bool:
        return self.verdict and self.mode_lo is not None and self.mode_lo <= m <= self.mode_hi


def check_unimodal(seq: Sequence[int]) -> ModeReport:
    seq = list(seq)
    fallen = False
    for k in range(1, len(seq)):
        if seq[k] < seq[k - 1]:
            fallen = True
        elif seq[k] > seq[k - 1] and fallen:
            return ModeReport(False, violation_index=k)
    if not seq:
        return ModeReport(True)
    top = max(seq)
    lo = seq.index(top)
    hi = len(seq) - 1 - seq[::-1].index(top)
    return ModeReport(True, lo, hi)


def check_log_concave(seq: Sequence[int]) -> Verdict:
    for k in range(1, len(seq) - 1):
        if seq[k] * seq[k] < seq[k - 1] * seq[k + 1]:
            return Verdict(False, k)
    return Verdict(True)


def check_ultra_log_concave(seq: Sequence[int], n: Optional[int] = None) -> Verdict:
    """Log-concavity of a_k / C(n, k), for a sequence a_0..a_n.

    Uses the reduced cross-multiplied form
    a_k^2 * k * (n - k) >= a_{k-1} * a_{k+1} * (k + 1) * (n - k + 1),
    obtained by dividing the binomial form through by C(n, k)^2.
    """
    if n is None:
        n = len(seq) - 1
    if len(seq) != n + 1:
        raise ValueError(f"sequence of length {len(seq)} does not match n={n}")
    for k in range(1, n):
        if seq[k] * seq[k] * k * (n - k) < seq[k - 1] * seq[k + 1] * (k + 1) * (n - k + 1):
            return Verdict(False, k)
    return Verdict(True)


def check_ultra_log_concave_binomial(seq: Sequence[int], n: Optional[int] = None) -> Verdict:
    """Same verdict as ``check_ultra_log_concave``, with the full binomial factors."""
    if n is None:
        n = len(seq) - 1
    if len(seq) != n + 1:
        raise ValueError(f"sequence of length {len(seq)} does not match n={n}")
    for k in range(1, n):
        lhs = seq[k] ** 2 * math.comb(n, k - 1) * math.comb(n, k + 1)
        rhs = seq[k - 1] * seq[k + 1] * math.comb(n, k) ** 2
        if lhs < rhs:
            return Verdict(False, k)
    return Verdict(True)


def check_barely_increasing(modes: Sequence[int]) -> Verdict:
    for i in range(1, len(modes)):
        if not 0 <= modes[i] - modes[i - 1] <= 1:
            return Verdict(False, i)
    return Verdict(True)


def _reachable(intervals):
    # reach[i] = set of values m_i can take in some barely increasing prefix
    reach = []
    for lo, hi in intervals:
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        if reach:
            a, b = reach[-1]
            lo, hi = max(lo, a), min(hi, b + 1)
            if lo > hi:
                return None
        reach.append((lo, hi))
    return reach


def _backtrack(reach, prefer):
    if not reach:
        return []
    pick = min if prefer == "low" else max
    out = [pick(reach[-1])]
    for a, b in reversed(reach[:-1]):
        lo, hi = max(a, out[-1] - 1), min(b, out[-1])
        out.append(lo if prefer == "low" else hi)
    out.reverse()
    return out


def select_modes(mode_intervals: Sequence[tuple[int, int]], prefer: str = "low") -> Optional[list[int]]:
    """Pick m_i in [lo_i, hi_i] with 0 <= m_{i+1} - m_i <= 1, or return None.

    Values reachable for m_i form an interval, so feasibility is decided
    in one forward pass; a backward pass then recovers an assignment,
    taking the smallest (``prefer="low"``) or largest admissible value.
    """
    if prefer not in ("low", "high"):
        raise ValueError("prefer must be 'low' or 'high'")
    reach = _reachable(mode_intervals)
    if reach is None:
        return None
    return _backtrack(reach, prefer)


class FailureReason(str, enum.Enum):
    NOT_UNIMODAL = "not-unimodal"
    NEGATIVE_COEFFICIENT = "negative-coefficient"
    NO_MODE_ASSIGNMENT = "no-barely-increasing-mode-assignment"


@dataclass(frozen=True)
class Failure:
    index: int
    reason: FailureReason


@dataclass(frozen=True)
class CertifierReport:
    k: int
    verified_up_to: int
    chosen_modes: list[int] = field(default_factory=list)
    failure: Optional[Failure] = None
    polynomials: list[IntPolynomial] = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return self.failure is None


def certify_theorem6(k: int, seeds: Sequence[IntPolynomial], horizon: int,
                     prefer: str = "low") -> CertifierReport:
    """Check property P_n for n = 0..horizon along f_n = x * (f_{n-1} + ... + f_{n-k}).

    P_n: f_0..f_n have nonnegative unimodal coefficients and admit a
    barely increasing choice of modes. ``seeds`` is f_0..f_{k-1}, or
    f_0..f_k in which case f_k must agree with the recurrence. The walk
    stops at the first index where P_n fails.
    """
    if k < 3:
        raise ValueError(f"window length k must be >= 3, got {k}")
    seeds = [IntPolynomial(s) if not isinstance(s, IntPolynomial) else s for s in seeds]
    if len(seeds) not in (k, k + 1):
        raise ValueError(f"expected {k} or {k + 1} seed polynomials, got {len(seeds)}")
    if horizon < k:
        raise ValueError(f"horizon must be >= k, got {horizon}")
    polys = list(seeds[:k])
    if len(seeds) == k + 1:
        expected = X * _sum(polys)
        if seeds[k] != expected:
            raise ValueError("seed f_k does not satisfy the recurrence")

    reach: list[tuple[int, int]] = []
    failure = None
    for n in range(horizon + 1):
        if n >= len(polys):
            polys.append(X * _sum(polys[n - k:n]))
        f = polys[n]
        if any(c < 0 for c in f.coeffs):
            failure = Failure(n, FailureReason.NEGATIVE_COEFFICIENT)
            break
        rep = check_unimodal(f.coeffs)
        if not rep.verdict:
            failure = Failure(n, FailureReason.NOT_UNIMODAL)
            break
        if f.coeffs:
            lo, hi = rep.mode_lo, rep.mode_hi
        else:
            # every index is a mode of the zero polynomial
            lo, hi = (reach[-1][0], reach[-1][1] + 1) if reach else (0, 0)
        nxt = _reachable(reach[-1:] + [(lo, hi)]) if reach else [(lo, hi)]
        if nxt is None:
            failure = Failure(n, FailureReason.NO_MODE_ASSIGNMENT)
            break
        reach.append(nxt[-1])

    return CertifierReport(k=k, verified_up_to=len(reach) - 1,
                           chosen_modes=_backtrack(reach, prefer),
                           failure=failure, polynomials=polys)


def _sum(polys):
    total = IntPolynomial()
    for p in polys:
        total = total + p
    return total
