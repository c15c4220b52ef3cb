# %% [markdown]
# # Nearest singular matrix with the same structure
#
# The structured distance picks the index minimizing |lambda_h| / kappa_h,
# which need not be the eigenvalue of smallest magnitude.

# %%
from sttnear import SttMatrix, structured_distance, tie_analysis

for m in (SttMatrix(1000, 2.0, -1.0), SttMatrix(1000, 0.0, 1.0), SttMatrix(10, 1.8, -1.0)):
    r = structured_distance(m)
    print(m)
    print(f"  unstructured d_F = {r.unstructured_distance:.4e} at h={r.unstructured_minimizer_indices}")
    print(f"  structured d_F^T = {r.structured_distance_f:.4e} at h={r.minimizer_indices}")
    for c in r.minimizers:
        print(f"    closest: ({m.n}; {c.delta_star:.6e}, {c.sigma_star:.6e})")
    print(f"  spectral bounds  : {r.spectral_lower:.4e} <= d_2^T <= {r.spectral_upper:.4e}")

# %% [markdown]
# Equal magnitudes do not force equal structured distances.

# %%
import math

t = tie_analysis(SttMatrix(9, math.cos(math.pi / 20), -math.sqrt(2) / 2))
print("magnitude minimizers:", t.magnitude_minimizers)
print("ratio minimizers    :", t.ratio_minimizers)
for note in t.notes:
    print(" ", note)
