"""Partitions of 6 under dominance.

Over k[[x]] a module of finite length is a partition, and M degenerates to
N exactly when the partition of M dominates that of N. This walks the
Hasse diagram for n = 6 and points out the first incomparable pair.
"""
from degenlab import Partition, dominance_hasse, dominates, predecessors

h = dominance_hasse(6)
print(f"{len(h.nodes)} partitions, {len(h.edges)} cover edges")
for upper, lower in sorted(h.labelled_edges()):
    print(f"  {upper} -> {lower}")

# dominance is not total from n = 6 on
p, q = Partition([3, 1, 1, 1]), Partition([2, 2, 2])
print(p, "vs", q, dominates(p, q), dominates(q, p))

# every cover is one box moved down to a lower row
print("covers of (4,2):", sorted(predecessors(Partition([4, 2])), reverse=True))
