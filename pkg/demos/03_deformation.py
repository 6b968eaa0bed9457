"""A one-parameter family of matrix factorizations of x^2.

At t = 0 the cokernel is not free. For t != 0 the
entry -t^2 is a unit and the presentation collapses to a single entry x^2
times a unit, so the generic fibre is free of rank one.
"""
from degenlab.mf import deformation_fixture, determinant, format_matrix, specialize, unit_reduce, verify_mf

fx = deformation_fixture()
print("f =", fx["f"])
print("Phi =", format_matrix(fx["Phi"]))
print("factorization:", bool(verify_mf(fx["Phi"], fx["Psi"], fx["f"])))
print("t = 0:", format_matrix(specialize(fx["Phi"], "t", 0)))
print("t invertible:", format_matrix(unit_reduce(fx["Phi"], {"t"})))
print("det Phi =", determinant(fx["Phi"]))
