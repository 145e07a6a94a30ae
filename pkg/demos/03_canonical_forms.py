"""Canonical forms, isomorphism tests and a Pasch switch.

Run with ``python3 demos/03_canonical_forms.py``.
"""
from designiso import are_isomorphic, canonical_form, pasch_switch, scramble, sts
from designiso.canonical import sequence_bound

D = sts(15)
E = scramble(D, seed=7)
cd, ce = canonical_form(D), canonical_form(E)
print("digest of STS(15):          ", cd.digest)
print("digest of a scrambled copy: ", ce.digest)
print("explored sequences:", cd.stats.sequences, "of at most", sequence_bound(D.v))
print("automorphisms found:", cd.stats.automorphisms)

phi = are_isomorphic(D, E)
print("point map:", phi)

# Trading one Pasch configuration for its complement gives a different STS(15).
S = pasch_switch(D)
print("switched digest:            ", canonical_form(S).digest)
print("isomorphic to the original:", are_isomorphic(D, S) is not None)
