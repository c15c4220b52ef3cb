# %% [markdown]
# # Spectrum and structured conditioning
#
# The eigenvectors of (n; delta, sigma) do not depend on the entries, so the
# structured condition numbers depend on n alone.

# %%
import numpy as np

from sttnear import SttMatrix, eigenvalues, structured_condition_number
from sttnear.sensitivity import condition_extremes, extremes_ratio_table

m = SttMatrix(9, np.cos(np.pi / 20), -np.sqrt(2) / 2)
lam = eigenvalues(m)
kappa = structured_condition_number(m.n)
for h, (l, k) in enumerate(zip(lam, kappa), start=1):
    print(f"h={h}  lambda={l: .4e}  kappa={k:.4e}")

# %% [markdown]
# Conditioning is worst at the ends of the spectrum and best in the middle.

# %%
lo, hi = condition_extremes(100)
print("best conditioned :", lo.indices, f"{lo.kappa:.4e}")
print("worst conditioned:", hi.indices, f"{hi.kappa:.4e}")

# %%
rows = extremes_ratio_table(100)
print("ratio largest/smallest kappa at n=2, 10, 100:",
      [f"{r[1]:.3f}" for r in rows if r[0] in (2, 10, 100)])
