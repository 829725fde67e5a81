"""
Retrieving similar cases
========================

A small case base of boolean symptom vectors. The context (and thus the
weights) can come from the whole case base while the query is ranked against
any subset of it.
"""

# %%
import io

from ctxsim import ingest, rank_by_dissimilarity

table = """name,fever,cough,rash,headache,fatigue
case01,1,1,0,0,1
case02,1,0,0,1,1
case03,0,0,1,0,0
case04,1,1,0,1,1
case05,0,1,0,0,0
case06,1,1,1,0,1
case07,0,0,0,1,1
case08,1,0,0,0,1
"""
ds = ingest(io.StringIO(table))
ctx = ds.context()
for name, p, w in zip(ctx.schema.names, ctx.probabilities, ctx.weights):
    print(f"{name:9s} p={p:.3f}  h={w:.3f}")

# %%
# "fatigue" is present in 6 of 8 cases, so it carries less weight than "cough".
query = ds["case04"]
result = rank_by_dissimilarity(ctx, query, [c for c in ds.cases if c.name != query.name])
for name, d in result.ranked:
    print(f"{name}  {d:.3f}")
print("ties:", result.ties or "none")
