"""
Domination polynomials of path and cycle powers
===============================================

The coefficient of x^k counts the dominating sets of size k.
"""

from dompow import cycle_poly, path_poly_A, path_poly_B, path_poly_via_relaxed

# The square of the path on 4 vertices: edges join vertices at distance <= 2.
print("P_4^2:", path_poly_A(4, 2))

# Three independent routes give the same polynomial.
for n in (5, 12, 40):
    a, b, r = path_poly_A(n, 3), path_poly_B(n, 3), path_poly_via_relaxed(n, 3)
    print(f"n={n}: A == B == relaxed -> {a == b == r}")

# Cycle powers with n <= 2*ell + 1 are complete graphs: (1 + x)^n - 1.
print("C_5^2:", cycle_poly(5, 2))
print("C_6^2:", cycle_poly(6, 2))

# Coefficients are exact Python ints and grow quickly.
big = cycle_poly(400, 5)
print("largest coefficient of C_400^5 has", len(str(max(big))), "digits")
