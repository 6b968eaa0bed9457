"""Knorrer doubling of (x^j, x^(n+1-j)).

Adding y^2 + z^2 to the potential doubles the matrix size. Doubling twice
lands on x^(n+1) + y^2 + z^2 + u^2 + v^2; both checks are exact.
"""
from degenlab.mf import format_matrix, knorrer_double, monomial_mf

base = monomial_mf(2, 1)
d = knorrer_double(base)
print("f =", d.f)
for row in format_matrix(d.phi):
    print("  ", row)
q = knorrer_double(d, "u", "v")
print(q.size, q.f, q.verify().ok)

for n in range(1, 7):
    oks = [knorrer_double(monomial_mf(n, j)).verify().ok for j in range(1, n + 1)]
    print(n, all(oks))
