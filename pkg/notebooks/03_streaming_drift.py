"""
Tracking a drifting context
===========================

When cases keep arriving, the attribute probabilities are updated one case at
a time. Without a floor on the step size this is the exact running mean;
with a floor, old cases are gradually forgotten.
"""

# %%
import numpy as np

from ctxsim import estimate_probabilities, new_estimator, CaseVector

rng = np.random.default_rng(0)
attributes = ["a", "b", "c"]

# %%
# Before drift: attribute "a" is common, "b" is a coin flip, "c" is rare.
before = rng.random((500, 3)) < [0.9, 0.5, 0.1]
# After drift: "a" and "c" swap roles.
after = rng.random((500, 3)) < [0.1, 0.5, 0.9]
rows = np.vstack([before, after]).astype(int)

exact = new_estimator(attributes, alpha_floor_count=None)
forgetful = new_estimator(attributes, alpha_floor_count=50)

print(" step   running mean (a, b, c)    floor=50 (a, b, c)")
for t, row in enumerate(rows, start=1):
    exact.observe(row)
    forgetful.observe(row)
    if t % 100 == 0:
        print(f"{t:5d}   {np.round(exact.current_probabilities(), 3)}   "
              f"{np.round(forgetful.current_probabilities(), 3)}")

# %%
# The unfloored estimator agrees with the batch frequencies of everything seen.
cases = [CaseVector(str(i), r) for i, r in enumerate(rows)]
print(np.abs(exact.current_probabilities() - estimate_probabilities(cases)).max())

# %%
# Snapshots are frozen contexts, ready for computing distances.
snap = forgetful.snapshot_context()
print(snap, snap.weights.round(3))
