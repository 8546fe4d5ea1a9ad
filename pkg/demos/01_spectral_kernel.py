"""Tour of the spectral kernel: irreducibility, Perron roots, Metzler classes.

Run:  python3 demos/01_spectral_kernel.py
"""

import numpy as np

import bivirus as bv

B = np.array([[1.6, 1.0],
              [1.0, 1.6]])

print("infection matrix B =")
print(B)
print()

# Strong connectivity of the spreading graph is what makes the Perron
# machinery applicable; a block-diagonal pattern fails it.
print("is_irreducible(B)        :", bv.is_irreducible(B))
print("is_irreducible(identity) :", bv.is_irreducible(np.eye(2)))
print()

# The Perron root doubles as the epidemic threshold: with unit recovery
# rates the virus persists iff rho(B) > 1.
rho = bv.spectral_radius(B)
v = bv.perron_vector(B)
print(f"spectral_radius(B) = {rho:.12f}   (constant row sums -> 2.6 exactly)")
print(f"perron_vector(B)   = {v}   (symmetry -> uniform)")
print()

# Metzler matrices (nonnegative off-diagonals) are the linearizations this
# model produces; their rightmost eigenvalue decides stability.
M = -np.eye(2) + B
print(f"spectral_abscissa(-I + B) = {bv.spectral_abscissa(M):.12f}")
print("classify_metzler(-I + B)  :", bv.classify_metzler(M))
print("classify_metzler(-2 I)    :", bv.classify_metzler(-2 * np.eye(2)))

# At the endemic profile x = (1 - 1/rho) * ones the shrunken linearization
# sits exactly on the stability boundary.
x = (1.0 - 1.0 / rho) * np.ones(2)
P = -np.eye(2) + (1.0 - x)[:, None] * B
print("classify_metzler at the endemic linearization:",
      bv.classify_metzler(P))
