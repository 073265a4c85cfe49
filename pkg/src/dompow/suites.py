"""Verification suites: each cross-checks one group of identities over a grid
and records the number of checks and the first few counterexamples."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import islice

from .dompoly import (
    Family,
    GraphSpec,
    cycle_row,
    domination_poly,
    gamma1_path,
    path_row,
    path_row_B,
    path_row_via_relaxed,
    relaxed_path_poly,
)
from .oracle import brute_domination_poly, brute_relaxed_domination_poly, build_power_graph
from .polycore import IntPolynomial, X, binomial_expand
from .unimodal import FailureReason, certify_theorem6, check_barely_increasing

MAX_REPORTED = 5


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, what) -> bool:
        self.checks += 1
        if not cond:
            self.failures.append(what() if callable(what) else str(what))
        return cond

    def report(self) -> str:
        lines = [f"suite {self.name}: {self.checks} checks, {len(self.failures)} failed"]
        lines += [f"  note: {n}" for n in self.notes]
        lines += [f"  FAIL: {f}" for f in self.failures[:MAX_REPORTED]]
        if len(self.failures) > MAX_REPORTED:
            lines.append(f"  ... {len(self.failures) - MAX_REPORTED} more")
        return "\n".join(lines)


def verify_routes(n_max: int = 300, ell_max: int = 20) -> SuiteResult:
    """Scheme A against scheme B (all n) and the relaxed route (n >= ell + 1)."""
    res = SuiteResult("routes")
    for ell in range(1, ell_max + 1):
        a_rows = [tuple(r) for r in islice(path_row(ell), n_max + 1)]
        for n, b in enumerate(islice(path_row_B(ell), n_max + 1)):
            res.check(a_rows[n] == b.coeffs, lambda: f"A != B at n={n}, ell={ell}")
        for n, row in path_row_via_relaxed(ell):
            if n > n_max:
                break
            res.check(a_rows[n] == tuple(row), lambda: f"A != relaxed at n={n}, ell={ell}")
    return res


def verify_oracle(n_max: int = 18, ell_max: int | None = None) -> SuiteResult:
    """Recurrences against brute force for 1 <= n <= n_max, 1 <= ell <= n."""
    res = SuiteResult("oracle")
    for family in Family:
        for n in range(1, n_max + 1):
            for ell in range(1, (n if ell_max is None else min(n, ell_max)) + 1):
                spec = GraphSpec(family, n, ell)
                g = build_power_graph(spec)
                res.check(domination_poly(spec) == brute_domination_poly(g),
                          lambda: f"{family.value} n={n} ell={ell}: recurrence != brute force")
                if family is Family.PATH:
                    res.check(relaxed_path_poly(n, ell) == brute_relaxed_domination_poly(g, min(ell, n)),
                              lambda: f"relaxed n={n} ell={ell}: recurrence != brute force")
    return res


def verify_identities(ell_max: int = 30, n_max: int | None = None) -> SuiteResult:
    """Small-n identities for path powers and the closed forms for cycles.

    Per ell, n runs up to ``n_max`` (default 4*ell + 4) which covers every
    regime in which the identities are non-vacuous.
    """
    res = SuiteResult("identities")
    for ell in range(1, ell_max + 1):
        top = 4 * ell + 4 if n_max is None else n_max
        P = [IntPolynomial(r) for r in islice(path_row(ell), top + 1)]
        C = [IntPolynomial(r) for r in islice(cycle_row(ell), max(top, 2 * ell + 2) + 1)]
        for n in range(1, top + 1):
            p = P[n]
            if n >= 2:
                res.check(p[1] == gamma1_path(n, ell),
                          lambda: f"gamma_1 closed form fails at n={n}, ell={ell}")
            for m in range(max(n - ell, 1), n + 1):
                res.check(p[m] == math.comb(n, m), lambda: f"binomial regime fails n={n} m={m} ell={ell}")
            if n <= ell + 1:
                res.check(p == binomial_expand(n) - 1, lambda: f"complete path n={n}, ell={ell}")
            if ell + 2 <= n <= 2 * ell + 1:
                q = P[n - 1]
                for m in range(2, n + 1):
                    res.check(p[m] == q[m] + q[m - 1], lambda: f"rec1 fails n={n} m={m} ell={ell}")
                res.check(p[1] == q[1] - 1, lambda: f"rec2 fails n={n} ell={ell}")
        for n in range(1, 2 * ell + 2):
            res.check(C[n] == binomial_expand(n) - 1, lambda: f"cycle closed form n={n}, ell={ell}")
        m = 2 * ell + 2
        res.check(C[m] == binomial_expand(m) - IntPolynomial((1, m)),
                  lambda: f"cycle C_(2ell+2) closed form, ell={ell}")
    return res


def counterexample_seeds(k: int) -> list[IntPolynomial]:
    """f_0 = 3, f_1 = x, f_i = 2x^2 for 2 <= i <= k-1."""
    return [IntPolynomial((3,)), X] + [IntPolynomial((0, 0, 2))] * (k - 2)


def verify_theorem6(ell_max: int = 8, n_max: int = 300, k_max: int = 8) -> SuiteResult:
    """Certifier runs: expected failures on the counterexample seeds, and full
    certification for path and cycle seeds with window k = 2*ell + 1."""
    res = SuiteResult("theorem6")
    for k in range(3, k_max + 1):
        rep = certify_theorem6(k, counterexample_seeds(k), max(n_max, k))
        expected = (rep.failure is not None and rep.failure.index == k
                    and rep.failure.reason is FailureReason.NOT_UNIMODAL
                    and rep.verified_up_to == k - 1)
        res.check(expected, lambda: f"counterexample k={k}: got {rep.failure}, verified_up_to={rep.verified_up_to}")
        if expected:
            res.notes.append(f"counterexample k={k}: expected failure at n={k} observed")
    for ell in range(1, ell_max + 1):
        k = 2 * ell + 1
        path_seeds = [IntPolynomial(r) for r in islice(path_row(ell), k + 1)]
        cycle_seeds = [IntPolynomial(r) for r in islice(cycle_row(ell), 1, k + 2)]
        for label, seeds in (("path", path_seeds), ("cycle", cycle_seeds)):
            rep = certify_theorem6(k, seeds, n_max)
            res.check(rep.ok and rep.verified_up_to == n_max,
                      lambda: f"{label} ell={ell}: {rep.failure}, verified_up_to={rep.verified_up_to}")
            res.check(check_barely_increasing(rep.chosen_modes).ok,
                      lambda: f"{label} ell={ell}: chosen modes not barely increasing")
    return res


SUITES = {
    "routes": verify_routes,
    "oracle": verify_oracle,
    "identities": verify_identities,
    "theorem6": verify_theorem6,
}
