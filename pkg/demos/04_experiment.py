# %% [markdown]
# # How often do the two minimizers differ?
#
# Draw delta and sigma from a standard normal, keep indefinite matrices and
# count those whose smallest |lambda| and smallest |lambda|/kappa sit at
# different indices.

# %%
from sttnear.oracle import ExperimentConfig, mismatch_experiment

res = mismatch_experiment(ExperimentConfig(n_min=2, n_max=50, samples_per_n=10_000))
print(f"tested {res.totals['tested']}, mismatches {res.totals['mismatches']}, {res.percentage:.3f}%")

# %% [markdown]
# The rate falls with n, so the pooled figure depends on the range of n.

# %%
for row in res.per_n:
    if row.n in (3, 5, 10, 20, 50):
        print(f"n={row.n:3d}  {100 * row.mismatches / row.tested:6.2f}%")
