"""
Unimodality, log-concavity and where the mode sits
==================================================

Every polynomial here is unimodal and ultra-log-concave. The mode sits at
ceil(n/2) while n is small relative to ell, but for ell <= 4 it drifts
above ceil(n/2) as n grows.
"""

from itertools import islice

from dompow.dompoly import path_row
from dompow.unimodal import check_log_concave, check_ultra_log_concave, check_unimodal

for ell in (1, 2, 5):
    drift = []
    for n, coeffs in enumerate(islice(path_row(ell), 201)):
        rep = check_unimodal(coeffs)
        assert rep and check_log_concave(coeffs) and check_ultra_log_concave(coeffs)
        if n in (10, 50, 100, 200):
            drift.append(f"n={n}: modes [{rep.mode_lo}, {rep.mode_hi}], ceil(n/2)={(n + 1) // 2}")
    print(f"ell={ell}")
    for line in drift:
        print("   ", line)
