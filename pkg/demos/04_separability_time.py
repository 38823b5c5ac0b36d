"""
Separability time
=================

Thermal noise eventually destroys the entanglement of an initially
entangled pair. The separability time tau_sep is where the smallest
partially transposed symplectic eigenvalue crosses 1/2.
"""

# %%
import math

import numpy as np

from gaussbalance import TripartiteParams, separability_time
from gaussbalance.noise import lambda_tilde_at

n_th = 0.2
for delta in np.linspace(-3.0, 1.0, 9):
    p = TripartiteParams(1.0, 1.0 - delta)
    ts = {pair: separability_time(p, n_th, pair) for pair in ("AB", "AC", "BC")}
    print(f"delta={delta:5.2f}  " + "  ".join(f"{k}: {v:.4f}" for k, v in ts.items()))

# %%
# At the returned time the eigenvalue sits on the threshold.
p = TripartiteParams(1.0, 1.0)
ts = separability_time(p, n_th, "AB")
print(f"lambda~ at tau_sep: {lambda_tilde_at(p, n_th, 'AB', ts):.12f}")

# %%
# With pure loss (N_th = 0) the entanglement decays but never vanishes at
# finite time. The search reports that as an infinite separability time.
ts0 = separability_time(p, 0.0, "AB")
print(f"N_th = 0: tau_sep = {ts0}, infinite: {math.isinf(ts0)}")
