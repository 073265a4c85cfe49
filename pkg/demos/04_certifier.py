"""
Certifying unimodality along a window recurrence
================================================

If f_n = x * (f_{n-1} + ... + f_{n-k}) and f_0..f_k are unimodal with a
barely increasing choice of modes, the property propagates to every n.
The certifier checks this step by step and reports the first failure.
"""

from itertools import islice

from dompow.dompoly import path_row
from dompow.polycore import IntPolynomial
from dompow.suites import counterexample_seeds
from dompow.unimodal import certify_theorem6

# Seeds that are fine up to k-1 but break at k.
rep = certify_theorem6(4, counterexample_seeds(4), 50)
print("counterexample:", rep.failure, "modes so far:", rep.chosen_modes)

# Domination polynomials of P_n^2 for n = 0..5 as seeds, window 5.
seeds = [IntPolynomial(r) for r in islice(path_row(2), 6)]
rep = certify_theorem6(5, seeds, 300)
print("P^2 seeds verified up to", rep.verified_up_to)
print("first modes:", rep.chosen_modes[:16])
