"""Three extended orders on modules over k[[x]]/(x^m).

Generate from dominance, from extension steps, or from AR sequences, close
under cancellation, common summands and roots, and compare. Also decompose
a short exact sequence into AR sequences.
"""
import json

from degenlab import CyclicModule, Partition, decompose_ses
from degenlab.ar import ar_sequences, verify_theorem44

for s in ar_sequences(4):
    print(s)

M = lambda *parts: CyclicModule(Partition(parts), 4)
# 0 -> M1 -> M4 -> M3 -> 0 is the sum of the first three AR sequences
print(decompose_ses(M(1), M(4), M(3)))

for m in (2, 3, 4, 5):
    rep = verify_theorem44(m, 8)
    print(json.dumps({k: v for k, v in rep.to_json().items() if k != "witnesses"}))
