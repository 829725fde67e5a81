"""
Austria, Sweden and Hungary in two contexts
===========================================

Subjects asked which country goes with Austria choose Sweden when the other
options are Sweden, Poland and Hungary, but Hungary when Poland is swapped for
Norway. Entropy weights computed from the four countries on the table give
the same answers.
"""

# %%
from ctxsim import CaseVector, build_context, dissimilarity_matrix, group_with, hamming

attributes = ["north", "central", "communist", "neutral"]
country = {
    "Austria": [0, 1, 0, 1],
    "Sweden": [1, 0, 0, 1],
    "Poland": [0, 0, 1, 0],
    "Norway": [1, 0, 0, 0],
    "Hungary": [0, 1, 1, 0],
}


def context_of(names):
    cases = [CaseVector(n, country[n]) for n in names]
    return cases, build_context(attributes, cases)


# %%
# With Poland present, "north" is rare (only Sweden), so it is a weak attribute.
cases1, ctx1 = context_of(["Austria", "Sweden", "Poland", "Hungary"])
print(ctx1)
print("weights:", ctx1.weights.round(3))
for a, b, d in dissimilarity_matrix(ctx1, cases1).pairs():
    print(f"  {a:8s} {b:8s} {d:.3f}")
print("Austria groups with", group_with(ctx1, cases1[0], cases1[1:]).choice)

# %%
# Norway makes "north" common and "communist" rare instead.
cases2, ctx2 = context_of(["Austria", "Sweden", "Norway", "Hungary"])
print("weights:", ctx2.weights.round(3))
for a, b, d in dissimilarity_matrix(ctx2, cases2).pairs():
    print(f"  {a:8s} {b:8s} {d:.3f}")
print("Austria groups with", group_with(ctx2, cases2[0], cases2[1:]).choice)

# %%
# Plain Hamming distance cannot tell the two apart.
a, s, h = (CaseVector(n, country[n]) for n in ("Austria", "Sweden", "Hungary"))
print("Hamming(Austria, Sweden)  =", hamming(a, s))
print("Hamming(Austria, Hungary) =", hamming(a, h))
