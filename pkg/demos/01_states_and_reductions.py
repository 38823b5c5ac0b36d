"""
States and their reductions
===========================

The tripartite state is fixed by two photon numbers, N_B and N_C, with
N_A = N_B + N_C. This script builds its covariance matrix, looks at the
two-mode reductions and shows which of them are entangled.
"""

# %%
# Photon numbers from the coupling dynamics. With |g2| > |g1| the numbers
# oscillate and the constant of motion N_A - N_B - N_C stays at zero.
import numpy as np

from gaussbalance import CouplingParams, TripartiteParams, build_cm, photon_numbers, reduce
from gaussbalance.symplectic import symplectic_eigenvalues, symplectic_spectrum, two_mode_invariants

for t in np.linspace(0.0, 2.0, 5):
    p = photon_numbers(CouplingParams(gamma1=0.6, gamma2=1.0, t=t))
    print(f"t={t:.1f}  N_A={p.n_a:.4f}  N_B={p.n_b:.4f}  N_C={p.n_c:.4f}")

# %%
# The 6x6 covariance matrix in (qA, pA, qB, pB, qC, pC) order. The
# vacuum contributes 1/2 on the diagonal.
p = TripartiteParams(n_b=1.0, n_c=0.5)
sigma = build_cm(p)
np.set_printoptions(precision=4, suppress=True)
print(sigma.matrix)

# %%
# The global state is pure: every symplectic eigenvalue is 1/2.
print("global spectrum:", symplectic_eigenvalues(sigma))

# %%
# Each two-mode reduction has lambda_- = 1/2 and lambda_+ = 1/2 + N_j,
# with j the traced-out mode. The smallest eigenvalue of the partial
# transpose decides entanglement: AB and AC are entangled, BC is not.
for pair in ("AB", "AC", "BC"):
    spec = symplectic_spectrum(two_mode_invariants(reduce(p, pair)))
    print(f"{pair}: lambda-={spec.lambda_minus:.6f}  lambda+={spec.lambda_plus:.6f}  "
          f"lambda~-={spec.lambda_tilde_minus:.6f}  entangled={spec.lambda_tilde_minus < 0.5}")
