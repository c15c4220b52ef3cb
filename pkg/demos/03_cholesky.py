# %% [markdown]
# # Cholesky factor of a definite Toeplitz matrix
#
# The bidiagonal factor comes from a short forward recurrence; its entries
# settle quickly to a fixed point.

# %%
import numpy as np

from sttnear import SttMatrix
from sttnear.cholesky import (
    cholesky_factor,
    inverse_factor,
    inverse_factor_report,
    laplacian_inverse,
    monotonicity_report,
)

m = SttMatrix(1000, 2.0, -1.0)
f = cholesky_factor(m)
print("first diagonal entries:", np.round(f.diag[:5], 6))
print("last diagonal entry   :", f.diag[-1])
print(monotonicity_report(f, m))

# %%
rinv = inverse_factor(f)
print(inverse_factor_report(rinv, m.sigma))

# %%
tinv = laplacian_inverse(6)
print(np.round(tinv * 7, 3))
