"""Grid scans over (family, ell, n) with per-polynomial sequence verdicts."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, TextIO

from .dompoly import Family, family_row
from .unimodal import check_log_concave, check_ultra_log_concave, check_unimodal

CSV_HEADER = "family,n,ell,degree,min_support,mode_lo,mode_hi,unimodal,log_concave,ultra_log_concave"
FIELDS = CSV_HEADER.split(",")


@dataclass(frozen=True)
class ScanRow:
    family: str
    n: int
    ell: int
    degree: int
    min_support: int
    mode_lo: int
    mode_hi: int
    unimodal: bool
    log_concave: bool
    ultra_log_concave: bool

    @property
    def violation(self) -> bool:
        return not (self.unimodal and self.log_concave and self.ultra_log_concave)

    @property
    def half_mode(self) -> bool:
        """Whether ceil(n/2) lies in the mode interval."""
        return self.unimodal and self.mode_lo <= (self.n + 1) // 2 <= self.mode_hi

    def to_csv(self) -> str:
        return ",".join(_fmt(getattr(self, f)) for f in FIELDS)

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def row_for(family: str, n: int, ell: int, coeffs: list[int]) -> ScanRow:
    rep = check_unimodal(coeffs)
    support = next(k for k, c in enumerate(coeffs) if c)
    return ScanRow(
        family=family, n=n, ell=ell,
        degree=len(coeffs) - 1,
        min_support=support,
        mode_lo=rep.mode_lo if rep.verdict else -1,
        mode_hi=rep.mode_hi if rep.verdict else -1,
        unimodal=rep.verdict,
        log_concave=check_log_concave(coeffs).ok,
        ultra_log_concave=check_ultra_log_concave(coeffs, len(coeffs) - 1).ok,
    )


def scan_ell_row(family: str, ell: int, n_max: int) -> list[ScanRow]:
    """Rows for n = 1..n_max at fixed ell, computed incrementally in n."""
    out = []
    for n, coeffs in enumerate(family_row(family, ell)):
        if n > n_max:
            break
        if n >= 1:
            out.append(row_for(family, n, ell, coeffs))
    return out


def _task(args):
    return scan_ell_row(*args)


def scan(families: Iterable[Family | str], n_max: int, ell_max: int, jobs: int = 1) -> Iterator[ScanRow]:
    """Yield rows sorted by (family, ell, n); worker count does not affect the output."""
    if n_max < 1 or ell_max < 1:
        raise ValueError("n_max and ell_max must be >= 1")
    fams = sorted({Family(f).value for f in families})
    tasks = [(f, ell, n_max) for f in fams for ell in range(1, ell_max + 1)]
    if jobs <= 1:
        for t in tasks:
            yield from _task(t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() returns results in task order
        for rows in pool.map(_task, tasks):
            yield from rows


def write_scan(rows: Iterable[ScanRow], out: TextIO, fmt: str = "csv") -> dict:
    """Write rows and return summary counts."""
    if fmt not in ("csv", "jsonl"):
        raise ValueError(f"unknown format {fmt!r}")
    total = violations = off_half = 0
    if fmt == "csv":
        out.write(CSV_HEADER + "\n")
    for row in rows:
        out.write((row.to_csv() if fmt == "csv" else row.to_json()) + "\n")
        total += 1
        violations += row.violation
        off_half += not row.half_mode
    return {"rows": total, "violations": violations, "mode_off_half": off_half}
