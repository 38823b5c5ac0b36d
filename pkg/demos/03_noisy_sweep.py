"""
Balance under loss and thermal noise
====================================

Each mode goes through an independent thermal channel with mean photon
number N_th. The residual Delta_hk stops being zero. This script sweeps
delta = N_B - N_C and the scaled time tau and reports where it changes sign.
"""

# %%
import numpy as np

from gaussbalance.sweep import SweepConfig, run_sweep

cfg = SweepConfig(n_b=1.0, n_th=0.2, delta_steps=41, tau_steps=31)
records = run_sweep(cfg)
print(f"{len(records)} records")

# %%
# Delta_AB and Delta_AC never become positive, while Delta_BA and
# Delta_CA take both signs. The KW residual stays nonnegative everywhere.
for pair in ("AB", "AC", "BA", "CA"):
    vals = np.array([r.delta_residual for r in records if r.pair == pair])
    print(f"Delta_{pair}: min {vals.min(): .4f}  max {vals.max(): .4f}")
kw = min(r.delta_kw_residual for r in records)
print(f"smallest Delta^KW over all pairs: {kw:.2e}")

# %%
# A coarse text region plot of sign(Delta_BA): rows are tau, columns delta.
deltas = sorted({r.delta for r in records})
taus = sorted({r.tau for r in records})
table = {(r.delta, r.tau): r.delta_residual for r in records if r.pair == "BA"}
for tau in taus[::3]:
    row = "".join("+" if table[(d, tau)] > 1e-9 else "-" if table[(d, tau)] < -1e-9 else "0"
                  for d in deltas)
    print(f"tau={tau:4.2f} {row}")
