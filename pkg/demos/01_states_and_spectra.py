"""States, marginals, and the two coordinate systems for polytope points.

A pure state on C^{d1} x ... x C^{dN} is a dense amplitude vector over the
computational product basis.  Its image under the moment map is the tuple
of one-body reduced density matrices; the polytope lives in the space of
their ordered spectra.
"""

from fractions import Fraction as F

import numpy as np

import polyent as pe

# Build states from sparse term lists; amplitudes are normalized on demand.
ghz = pe.ghz_state()
w = pe.w_state()
w3 = pe.PureState.from_terms((2, 2, 3), [((0, 0, 0), 1), ((0, 1, 1), 1), ((1, 1, 2), 1)])

print("GHZ marginal of qubit 2:\n", pe.reduced_density_matrix(ghz, i=2).real)
print("W marginal of qubit 1:\n", pe.reduced_density_matrix(w, i=1).real)

# Ordered local spectra and the 'most local' truncation that drops the
# smallest eigenvalue of each system (it is redundant: they sum to one).
print("\nGHZ spectra:", pe.local_spectrum(ghz))
print("W most-local point:", pe.most_local(pe.local_spectrum(w)))
print("W3 spectra:", [tuple(round(x, 6) for x in p) for p in pe.local_spectrum(w3)])

# lift is the exact inverse of most_local on rational points.
point = (F(2, 3), F(2, 3), F(1, 3), F(1, 3))
print("\nlift", point, "->", pe.lift(point, (2, 2, 3)))

# Local unitaries leave the spectra fixed; general invertible local
# operators (SLOCC) move the state inside its entanglement class.
u = pe.random_unitary_tuple((2, 2, 2), seed=1)
print("\nunitary image keeps the spectrum:",
      np.allclose(pe.most_local(pe.local_spectrum(pe.apply_slocc(u, w))),
                  pe.most_local(pe.local_spectrum(w)), atol=1e-12))

g = pe.random_slocc((2, 2, 2), seed=2)
print("SLOCC image moves inside the class:",
      pe.most_local(pe.local_spectrum(pe.apply_slocc(g, w))))

# The trace-shifted moment map puts the tuple of maximally mixed marginals
# at the origin; GHZ sits exactly there.
print("\n||moment_map(GHZ)|| =", sum(np.linalg.norm(x) for x in pe.moment_map(ghz)))
print("moment_map(W) per qubit diag:", np.diag(pe.moment_map(w)[0]).real)
