"""Degenerations of rank 3 modules over the (A_2) surface singularity.

Indecomposables are the free module R and two rank one modules p and q.
Modules split into classes by kappa (rank and a theta residue mod 3) and
each class is a small poset; we print all three and emit DOT for one.
"""
from degenlab import ANRing, hasse_for_class, kappa
from degenlab.an import hasse_for_rank

ring = ANRing(2, 2)
h = hasse_for_rank(ring, 3)
for comp in h.components():
    print(" | ".join(h.labels[i] for i in comp))
    for a, b in h.edges:
        if a in comp:
            print(f"    {h.labels[a]} -> {h.labels[b]}")

M = ring.module(3)
print(kappa(M))
print(hasse_for_class(ring, kappa(M), 3).to_dot())
