"""Matrix factorizations over polynomial rings.

A matrix factorization of ``f`` is a pair of square matrices with
``phi @ psi == psi @ phi == f * I``; its cokernel is a maximal
Cohen-Macaulay module over the hypersurface ``S/(f)``.  Only the
presentations are manipulated here, never the modules themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .poly import I, Poly, poly_matrix

Matrix = list  # list of rows of Poly


def identity(s: int, scale=1) -> Matrix:
    scale = Poly.coerce(scale)
    return [[scale if i == j else Poly() for j in range(s)] for i in range(s)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if A and len(A[0]) != len(B):
        raise ValueError(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x?")
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        out.append([
            sum((row[k] * B[k][j] for k in range(len(B))), Poly())
            for j in range(cols)
        ])
    return out


def matrix_variables(A: Matrix) -> set[str]:
    return {v for row in A for e in row for v in e.variables()}


def format_matrix(A: Matrix) -> list[list[str]]:
    return [[str(e) for e in row] for row in A]


def determinant(A: Matrix) -> Poly:
    """Laplace expansion; fine for the small matrices used here."""
    n = len(A)
    if n == 0:
        return Poly.const(1)
    if n == 1:
        return A[0][0]
    total = Poly()
    for j in range(n):
        if A[0][j]:
            minor = [row[:j] + row[j + 1:] for row in A[1:]]
            term = A[0][j] * determinant(minor)
            total = total + (term if j % 2 == 0 else -term)
    return total


@dataclass
class MFReport:
    ok: bool
    failure: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_mf(phi: Matrix, psi: Matrix, f) -> MFReport:
    """Check ``phi psi = psi phi = f I`` exactly; report the first bad entry."""
    phi, psi, f = poly_matrix(phi), poly_matrix(psi), Poly.coerce(f)
    s = len(phi)
    if any(len(r) != s for r in phi) or len(psi) != s or any(len(r) != s for r in psi):
        raise ValueError("phi and psi must be square matrices of equal size")
    target = identity(s, f)
    for name, prod in (("phi*psi", matmul(phi, psi)), ("psi*phi", matmul(psi, phi))):
        for i in range(s):
            for j in range(s):
                if prod[i][j] != target[i][j]:
                    return MFReport(False, f"{name}[{i}][{j}] = {prod[i][j]}, expected {target[i][j]}")
    return MFReport(True)


@dataclass
class MFPair:
    phi: Matrix
    psi: Matrix
    f: Poly
    units: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        self.phi = poly_matrix(self.phi)
        self.psi = poly_matrix(self.psi)
        self.f = Poly.coerce(self.f)
        self.units = frozenset(self.units)

    @property
    def size(self) -> int:
        return len(self.phi)

    def variables(self) -> set[str]:
        return matrix_variables(self.phi) | matrix_variables(self.psi) | self.f.variables()

    def verify(self) -> MFReport:
        return verify_mf(self.phi, self.psi, self.f)

    def to_json(self) -> dict:
        return {
            "phi": format_matrix(self.phi),
            "psi": format_matrix(self.psi),
            "f": str(self.f),
            "units": sorted(self.units),
        }


def specialize(M: Matrix, var: str, value) -> Matrix:
    """Substitute ``value`` for ``var`` in every entry."""
    return [[e.subs(var, value) for e in row] for row in poly_matrix(M)]


def _find_unit(M: Matrix, units: frozenset) -> Optional[tuple[int, int]]:
    for i, row in enumerate(M):
        for j, e in enumerate(row):
            if e.is_unit(units):
                return i, j
    return None


def unit_reduce(M: Matrix, units: Iterable[str] = ()) -> Matrix:
    """Eliminate rows and columns through unit pivots.

    Each step clears the pivot's row and column by elementary operations
    and deletes them, which changes the cokernel only by a free summand
    of rank 0 (the pivot block is an isomorphism).  Returns the matrix
    left when no entry is a unit, possibly 0x0.
    """
    units = frozenset(units)
    M = poly_matrix(M)
    while M and M[0]:
        hit = _find_unit(M, units)
        if hit is None:
            break
        r, c = hit
        inv = M[r][c].inverse()
        M = [
            [M[i][j] - M[i][c] * inv * M[r][j] for j in range(len(M[i])) if j != c]
            for i in range(len(M)) if i != r
        ]
    return M


def knorrer_double(mf: MFPair, y: str = "y", z: str = "z") -> MFPair:
    """Matrix factorization of ``f + y^2 + z^2`` of twice the size.

    Uses the blocks ``[[phi, u I], [-v I, psi]]`` and
    ``[[psi, -u I], [v I, phi]]`` with ``u = y + i z`` and ``v = y - i z``,
    so that ``u v = y^2 + z^2``.
    """
    taken = mf.variables() | mf.units
    for w in (y, z):
        if w in taken:
            raise ValueError(f"variable collision: {w!r} already in use")
    if y == z:
        raise ValueError("the two new variables must differ")
    s = mf.size
    u = Poly.var(y) + I * Poly.var(z)
    v = Poly.var(y) - I * Poly.var(z)

    def block(a, b, c, d):
        return [a[i] + b[i] for i in range(s)] + [c[i] + d[i] for i in range(s)]

    U, V = identity(s, u), identity(s, v)
    neg = lambda A: [[-e for e in row] for row in A]
    phi2 = block(mf.phi, U, neg(V), mf.psi)
    psi2 = block(mf.psi, neg(U), V, mf.phi)
    f2 = mf.f + Poly.var(y) ** 2 + Poly.var(z) ** 2
    return MFPair(phi2, psi2, f2, mf.units)


def monomial_mf(n: int, j: int, x: str = "x") -> MFPair:
    """The rank-one factorization ``(x^j) (x^(n+1-j)) = x^(n+1)``."""
    if not 1 <= j <= n:
        raise ValueError(f"need 1 <= j <= n, got j={j}, n={n}")
    X = Poly.var(x)
    return MFPair([[X ** j]], [[X ** (n + 1 - j)]], X ** (n + 1))


def deformation_fixture() -> dict:
    """The two-parameter family deforming the free module R = k[[x,y]]/(x^2).

    ``phi``/``psi`` present the ideal (x, y^2)R; ``Phi``/``Psi`` deform
    them over k[t], with ``Phi`` at ``t = 0`` equal to ``phi``.
    """
    return {
        "f": Poly.coerce("x^2"),
        "phi": poly_matrix([["x", "y^2"], ["0", "x"]]),
        "psi": poly_matrix([["x", "-y^2"], ["0", "x"]]),
        "Phi": poly_matrix([["x + t*y", "y^2"], ["-t^2", "x - t*y"]]),
        "Psi": poly_matrix([["x - t*y", "-y^2"], ["t^2", "x + t*y"]]),
        "parameter": "t",
    }


def parse_matrix(rows: Sequence[Sequence]) -> Matrix:
    return poly_matrix(rows)
