"""A tour of small designs: parameters, validation and closure chains.

Run with ``python3 demos/01_designs_and_closures.py``.
"""
from designiso import (Params, boolean_sqs, check_admissibility, closure, derived_counts, fano,
                       generating_sequence, validate)

# The Fano plane is the smallest Steiner triple system.
F = fano()
print("Fano blocks:", F.blocks)
print("valid:", validate(F).ok)

# Derived counts come straight from the parameters.
c = derived_counts(F.params)
print(f"b={c.b} r={c.r} lambda_s={list(c.lambda_s)}")

# Not every parameter set is admissible; the report says why.
print(check_admissibility(Params(3, 9, 4, 1)))

# Closures grow a seed until no block meets it in t or more points.
D = boolean_sqs(4)
B = D.blocks[0]
print("closure of a block:", sorted(closure(D, B)))
print("closure of a block plus one point:", sorted(closure(D, set(B) | {15})))

# A generating sequence doubles its way up to the whole point set.
chain = generating_sequence(D, 0)
print("generators:", chain.generators)
print("fixpoint sizes:", [len(Y) for Y in chain.fixpoints])
