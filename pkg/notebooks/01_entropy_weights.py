"""
Entropy weights for boolean attributes
======================================

How much should a single mismatching attribute count? Here the answer depends
on how the attribute is spread over the known cases.
"""

# %%
# An attribute that splits the cases evenly (p = 0.5) is worth one bit; an
# attribute every case shares (p = 0 or 1) is worth nothing.
import numpy as np

from ctxsim.weights import attribute_weight, expected_path_length, joint_expected_path_length

for p in (0.0, 0.1, 0.25, 0.5, 0.75, 1.0):
    print(f"p = {p:4.2f}   h(p) = {attribute_weight(p):.4f}")

# %%
# The weight comes from a decision tree over m equally likely cases. Splitting
# on an attribute leaves an expected path length of (1 - 2p + 2p^2) log2(m);
# the weight is minus the log2 of that remaining fraction.
m = 1024
for p in (0.0, 0.25, 0.5):
    e = expected_path_length(p, m)
    print(f"p = {p:4.2f}   E = {e:6.3f} bits   -log2(E / log2 m) = {0.0 - np.log2(e / np.log2(m)):.4f}")

# %%
# Two independent attributes multiply their remaining fractions, so their
# weights add. That is why the dissimilarity is a plain sum over mismatches.
p1, p2 = 0.25, 0.5
joint = joint_expected_path_length(p1, p2, m) / np.log2(m)
print(f"-log2(joint fraction) = {-np.log2(joint):.6f}")
print(f"h(p1) + h(p2)         = {attribute_weight(p1) + attribute_weight(p2):.6f}")

# %%
# The curve is symmetric about 1/2 and flat at the top.
ps = np.linspace(0, 1, 11)
print(np.round(attribute_weight(ps), 4))
