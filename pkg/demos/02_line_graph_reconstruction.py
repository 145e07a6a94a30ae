"""From a design to its line graph and back again.

Run with ``python3 demos/02_line_graph_reconstruction.py``.
"""
import warnings

from designiso import boolean_sqs, fano, line_graph, reconstruct, scramble, strongly_regular_check, sts
from designiso.reconstruct import ReconstructionRefused

D = scramble(sts(13), seed=2024)
G = line_graph(D)
print(f"STS(13) line graph: {G.n} vertices, {G.num_edges} edges")
print("strongly regular (k, lambda, mu):", strongly_regular_check(G))

with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    R = reconstruct(G, 2, 3, 1)
for w in caught:
    print("note:", w.message)
print("certificate ok:", R.certificate.ok)
print("first three point-cliques:", [sorted(C) for C in R.point_cliques[:3]])

# Small designs sit below the b > k^2(k-1) threshold and are refused.
for small in (fano(), boolean_sqs(3)):
    p = small.params
    try:
        reconstruct(line_graph(small), p.t, p.k, p.lam)
    except ReconstructionRefused as exc:
        print("refused:", exc)
