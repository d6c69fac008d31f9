"""Radial spectra of the weighted finite Fourier transform on the disk.

For each angular order N, the radial eigenproblem is solved by expanding in
the zero-bandwidth eigenbasis, where the commuting differential operator is
symmetric tridiagonal.  This script walks through the three eigenvalue
families attached to one mode:

  chi    Sturm-Liouville eigenvalue of the commuting operator,
  mu     radial integral eigenvalue (H phi = sqrt(c) mu phi),
  lambda 2D transform eigenvalue, lambda = 2 (nu+1) i^N mu.
"""

import numpy as np

from diskslepian import SlepianParams, chi0, solve_modes

nu, c = 1.0, 3.0

print(f"weight exponent nu = {nu}, bandwidth c = {c}\n")
for N in (0, 1, 2):
    params = SlepianParams(nu=nu, c=c, N=N)
    modes = solve_modes(params, 5)
    print(f"N = {N}  (expansion truncated at K = {modes[0].truncation})")
    print(f"  {'n':>2} {'chi':>18} {'chi at c=0':>14} {'mu':>15} {'|lambda|':>13}")
    for m in modes:
        print(f"  {m.n:>2} {m.chi:>18.12f} {chi0(N, m.n, nu):>14.6f} "
              f"{m.mu:>15.6e} {abs(m.lam):>13.6e}")
    print()

# The bandwidth-zero limit: chi collapses onto the closed form and the
# transform becomes rank one on each angular sector, so lambda_00 -> 1.
for c_small in (1e-1, 1e-2, 1e-3):
    lam = solve_modes(SlepianParams(nu=nu, c=c_small, N=0), 1)[0].lam
    print(f"c = {c_small:7.0e}:  |lambda_00 - 1| = {abs(lam - 1):.3e}")

# Merged magnitude ordering across angular orders: the full 2D spectrum
# decays monotonically once the families are interleaved.
lams = []
for N in range(4):
    params = SlepianParams(nu=nu, c=c, N=N)
    lams += [(abs(m.lam), N, m.n) for m in solve_modes(params, 4)]
lams.sort(reverse=True)
print("\nlargest |lambda| across (N, n):")
for mag, N, n in lams[:8]:
    print(f"  |lambda| = {mag:.6e}   (N={N}, n={n})")
