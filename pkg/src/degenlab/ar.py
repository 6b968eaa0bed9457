"""Auslander-Reiten sequences and extended orders over k[[x]]/(x^m).

The indecomposables are ``M_a = k[[x]]/(x^a)`` for ``1 <= a <= m``, with
``M_m`` the free module.  For ``1 <= a < m`` the AR sequence ending in
``M_a`` is

    0 -> M_a -> M_(a-1) + M_(a+1) -> M_a -> 0        (M_0 = 0)

and its class ``delta_a = 2[M_a] - [M_(a-1)] - [M_(a+1)]`` in the free
abelian group on indecomposables.  The delta vectors restricted to
``M_1..M_(m-1)`` form the Cartan matrix of type A_(m-1).

The three extended orders (generated by degenerations, by extensions and
by AR sequences, then closed under adding/cancelling common summands and
taking/extracting powers) are computed as fixpoints on a finite universe
of modules, with explicit bounds on auxiliary summands and powers.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .cyclic import CyclicModule
from .partitions import Partition, box_moves, dominates, partitions_of

log = logging.getLogger(__name__)

TAGS = ("Dego", "Exto", "ARo")


# modules as multiplicity vectors over M_1..M_m

def to_vector(M: CyclicModule, m: int) -> tuple[int, ...]:
    if M.modulus != m:
        raise ValueError(f"module over modulus {M.modulus}, expected {m}")
    v = [0] * m
    for a in M.parts:
        v[a - 1] += 1
    return tuple(v)


def from_vector(v: Sequence[int]) -> CyclicModule:
    m = len(v)
    return CyclicModule(Partition(a + 1 for a in range(m) for _ in range(v[a])), m)


def vlength(v: Sequence[int]) -> int:
    return sum((a + 1) * c for a, c in enumerate(v))


# AR sequences

@dataclass(frozen=True)
class ARSequence:
    m: int
    a: int

    @property
    def X(self) -> CyclicModule:
        return CyclicModule(Partition([self.a]), self.m)

    Y = X

    @property
    def E(self) -> CyclicModule:
        return CyclicModule(Partition([self.a - 1, self.a + 1]), self.m)

    def __str__(self) -> str:
        a = self.a
        mid = f"M{a + 1}" if a == 1 else f"M{a - 1}+M{a + 1}"
        return f"0 -> M{a} -> {mid} -> M{a} -> 0"


def _shift_matrix(src: int, dst: int, shift: int) -> list[list[int]]:
    """k-matrix of the map k[x]/(x^src) -> k[x]/(x^dst), 1 -> x^shift."""
    return [[1 if (i == j + shift and i < dst) else 0 for j in range(src)] for i in range(dst)]


def _rank(rows: list[list]) -> int:
    A = [[Fraction(x) for x in r] for r in rows]
    rank, cols = 0, len(A[0]) if A else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(A)) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(len(A)):
            if r != rank and A[r][c]:
                f = A[r][c] / A[rank][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def sequence_maps(s: ARSequence) -> tuple[list[list[int]], list[list[int]]]:
    """k-linear matrices of ``M_a -> E`` and ``E -> M_a``.

    ``M_a -> M_(a-1)`` is the projection, ``M_a -> M_(a+1)`` is ``x*``;
    ``M_(a-1) -> M_a`` is ``x*`` and ``M_(a+1) -> M_a`` is minus the projection.
    """
    a = s.a
    inc = _shift_matrix(a, a - 1, 0) + _shift_matrix(a, a + 1, 1)
    left = _shift_matrix(a - 1, a, 1)
    right = [[-x for x in row] for row in _shift_matrix(a + 1, a, 0)]
    proj = [l + r for l, r in zip(left, right)] if a > 1 else right
    return inc, proj


def is_exact(s: ARSequence) -> bool:
    """Injective, surjective, and image = kernel, by ranks over Q."""
    inc, proj = sequence_maps(s)
    a = s.a
    dim_e = 2 * a
    if len(inc) != dim_e or len(proj[0]) != dim_e:
        return False
    composite_zero = all(x == 0 for row in _matmul(proj, inc) for x in row)
    return composite_zero and _rank(inc) == a and _rank(proj) == a


def ar_sequences(m: int) -> list[ARSequence]:
    if m < 2:
        raise ValueError("no AR sequences: k[[x]]/(x^m) needs m >= 2")
    out = [ARSequence(m, a) for a in range(1, m)]
    for s in out:
        if not is_exact(s):  # pragma: no cover - construction guarantees this
            raise AssertionError(f"constructed sequence is not exact: {s}")
    return out


# the free abelian group G(R)

def delta(s: ARSequence) -> tuple[int, ...]:
    """``[X] - [E] + [Y]`` as a vector over ``M_1..M_m``."""
    v = [0] * s.m
    v[s.a - 1] += 2
    if s.a >= 2:
        v[s.a - 2] -= 1
    v[s.a] -= 1
    return tuple(v)


def group_element(L: CyclicModule, M: CyclicModule, N: CyclicModule) -> tuple[int, ...]:
    m = M.modulus
    return tuple(l - b + n for l, b, n in zip(to_vector(L, m), to_vector(M, m), to_vector(N, m)))


def cartan_matrix(m: int) -> list[list[int]]:
    """Coefficients of ``delta_1..delta_(m-1)`` on ``M_1..M_(m-1)`` (columns are deltas)."""
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(m - 1)] for i in range(m - 1)]


def tridiagonal_solve(lower: Sequence, diag: Sequence, upper: Sequence, rhs: Sequence) -> list[Fraction]:
    """Exact Thomas algorithm; ``lower[0]`` and ``upper[-1]`` are ignored."""
    n = len(diag)
    c = [Fraction(0)] * n
    d = [Fraction(0)] * n
    for i in range(n):
        denom = Fraction(diag[i]) - (Fraction(lower[i]) * c[i - 1] if i else 0)
        if denom == 0:
            raise ZeroDivisionError("singular tridiagonal system")
        c[i] = Fraction(upper[i]) / denom if i < n - 1 else Fraction(0)
        d[i] = (Fraction(rhs[i]) - (Fraction(lower[i]) * d[i - 1] if i else 0)) / denom
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        x[i] = d[i] - (c[i] * x[i + 1] if i < n - 1 else 0)
    return x


def cartan_determinant(m: int) -> int:
    """Determinant of the A_(m-1) Cartan matrix via the tridiagonal recurrence."""
    prev, cur = 1, 2
    if m - 1 == 0:
        return 1
    for _ in range(m - 2):
        prev, cur = cur, 2 * cur - prev
    return cur


class NotRealizable(ValueError):
    pass


def decompose_ses(L: CyclicModule, M: CyclicModule, N: CyclicModule) -> dict[int, int]:
    """AR-sequence multiplicities ``{a: c_a}`` with ``sum c_a delta_a = [L] - [M] + [N]``."""
    m = M.modulus
    if m is None or L.modulus != m or N.modulus != m:
        raise ValueError("all three modules must live over the same k[[x]]/(x^m)")
    if M.length != L.length + N.length:
        raise ValueError(
            f"lengths {L.length} + {N.length} != {M.length}: not a short exact sequence"
        )
    g = group_element(L, M, N)
    if m == 1:
        if any(g):
            raise NotRealizable("not realizable as a short exact sequence functor filtration")
        return {}
    k = m - 1
    coeffs = tridiagonal_solve([-1] * k, [2] * k, [-1] * k, g[:k])
    if any(c.denominator != 1 or c < 0 for c in coeffs) or -coeffs[-1] != g[-1]:
        raise NotRealizable(
            f"not realizable as a short exact sequence functor filtration: coefficients {coeffs}"
        )
    return {a + 1: int(c) for a, c in enumerate(coeffs) if c}


def recombine(m: int, coefficients: dict[int, int]) -> tuple[int, ...]:
    out = [0] * m
    for a, c in coefficients.items():
        for i, x in enumerate(delta(ARSequence(m, a))):
            out[i] += c * x
    return tuple(out)


# extended orders

@dataclass(frozen=True)
class Bounds:
    """``aux_length``: how far beyond the target length an intermediate
    module may grow by adding common summands; ``power``: largest power
    or root taken."""

    aux_length: int
    power: int = 3


@dataclass
class OrderClosure:
    tag: str
    m: int
    max_length: int
    bounds: Bounds
    pairs: set = field(default_factory=set)  # (vector, vector), reflexive pairs included

    def holds(self, M: CyclicModule, N: CyclicModule) -> bool:
        return (to_vector(M, self.m), to_vector(N, self.m)) in self.pairs

    def strict_pairs(self) -> set:
        return {(a, b) for a, b in self.pairs if a != b}

    def module_pairs(self) -> list[tuple[CyclicModule, CyclicModule]]:
        return [(from_vector(a), from_vector(b)) for a, b in sorted(self.strict_pairs())]

    def is_antisymmetric(self) -> bool:
        return not any((b, a) in self.pairs for a, b in self.strict_pairs())


def _universe(m: int, top: int) -> list[list[tuple[int, ...]]]:
    """Vectors grouped by length ``0..top``."""
    return [[to_vector(CyclicModule(p, m), m) for p in partitions_of(n, m)] for n in range(top + 1)]


def _generators(tag: str, m: int, by_len) -> set:
    gens = set()
    if tag == "Dego":
        for mods in by_len:
            ps = [from_vector(v).parts for v in mods]
            for u, p in zip(mods, ps):
                for w, q in zip(mods, ps):
                    if u != w and dominates(p, q):
                        gens.add((u, w))
    elif tag == "Exto":
        for mods in by_len:
            for u in mods:
                for q in box_moves(from_vector(u).parts):
                    if not q or q[0] <= m:
                        gens.add((u, to_vector(CyclicModule(q, m), m)))
    elif tag == "ARo":
        if m >= 2:
            for s in ar_sequences(m):
                if 2 * s.a < len(by_len):
                    gens.add((to_vector(s.E, m), to_vector(s.X + s.Y, m)))
    else:
        raise ValueError(f"unknown order tag {tag!r}; expected one of {TAGS}")
    return gens


def _reduce(u, w):
    g = tuple(min(a, b) for a, b in zip(u, w))
    return tuple(a - c for a, c in zip(u, g)), tuple(b - c for b, c in zip(w, g))


def extended_closure(
    tag: str,
    m: int,
    max_length: int,
    bounds: Optional[Bounds] = None,
) -> OrderClosure:
    """Bounded fixpoint of an extended order on modules of length <= ``max_length``.

    Modules up to length ``max_length + bounds.aux_length`` serve as
    intermediates: common summands may be added as long as the sum stays
    within that length, and powers/roots use exponents up to
    ``bounds.power``.

    The relation is kept as a set of base pairs whose translates by all
    admissible common summands generate it under transitivity; the
    reduced form of every derived pair is fed back as a base pair, which
    accounts for cancellation.
    """
    if m < 1 or max_length < 0:
        raise ValueError("need m >= 1 and max_length >= 0")
    bounds = bounds or Bounds(max_length, 3)
    top = max_length + bounds.aux_length
    by_len = _universe(m, top)
    index = [{v: i for i, v in enumerate(mods)} for mods in by_len]
    up = [[1 << i for i in range(len(mods))] for mods in by_len]

    base: set = set()
    todo = [_reduce(u, w) for u, w in _generators(tag, m, by_len)]
    while todo:
        fresh = []
        for pair in todo:
            if pair[0] != pair[1] and pair not in base:
                base.add(pair)
                fresh.append(pair)
        if not fresh:
            break
        for u, w in fresh:
            n0 = vlength(u)
            for extra in range(0, top - n0 + 1):
                for L in by_len[extra]:
                    a = tuple(x + y for x, y in zip(u, L))
                    b = tuple(x + y for x, y in zip(w, L))
                    n = n0 + extra
                    up[n][index[n][a]] |= 1 << index[n][b]
        for n, rows in enumerate(up):
            _transitive_close(rows)
        todo = []
        for n, mods in enumerate(by_len):
            for i, row in enumerate(up[n]):
                u = mods[i]
                for j in _bits(row):
                    if j == i:
                        continue
                    a, b = _reduce(u, mods[j])
                    if (a, b) not in base:
                        todo.append((a, b))
                    for k in range(2, bounds.power + 1):
                        if all(x % k == 0 for x in a + b):
                            root = (tuple(x // k for x in a), tuple(x // k for x in b))
                            if root not in base:
                                todo.append(root)
                        if vlength(a) * k <= top:
                            powr = (tuple(x * k for x in a), tuple(x * k for x in b))
                            if powr not in base:
                                todo.append(powr)
        log.debug("%s m=%d: %d base pairs", tag, m, len(base))

    pairs = set()
    for n in range(max_length + 1):
        mods = by_len[n]
        for i, row in enumerate(up[n]):
            for j in _bits(row):
                pairs.add((mods[i], mods[j]))
    return OrderClosure(tag, m, max_length, bounds, pairs)


def _transitive_close(rows: list[int]) -> None:
    for k in range(len(rows)):
        bit, rk = 1 << k, rows[k]
        for i in range(len(rows)):
            if rows[i] & bit:
                rows[i] |= rk


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def dominance_pairs(m: int, max_length: int) -> set:
    out = set()
    for n in range(max_length + 1):
        parts = partitions_of(n, m)
        for p in parts:
            for q in parts:
                if dominates(p, q):
                    out.add((to_vector(CyclicModule(p, m), m), to_vector(CyclicModule(q, m), m)))
    return out


@dataclass
class Theorem44Report:
    m: int
    max_length: int
    bounds: Bounds
    equal: bool
    matches_dominance: dict
    witnesses: list
    stabilized_at: dict
    sizes: dict
    seconds: float

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "max_length": self.max_length,
            "bounds": {"C_max": self.bounds.aux_length, "k_max": self.bounds.power},
            "equal": self.equal,
            "matches_dominance": self.matches_dominance,
            "witnesses": self.witnesses,
            "stabilized_at": self.stabilized_at,
            "sizes": self.sizes,
            "seconds": round(self.seconds, 3),
        }


def _smallest_stable(tag, m, max_length, bounds, final) -> dict:
    lo, hi = 0, bounds.aux_length
    while lo < hi:
        mid = (lo + hi) // 2
        if extended_closure(tag, m, max_length, Bounds(mid, bounds.power)).pairs == final:
            hi = mid
        else:
            lo = mid + 1
    k = 1
    while k < bounds.power and extended_closure(tag, m, max_length, Bounds(bounds.aux_length, k)).pairs != final:
        k += 1
    return {"C_max": lo, "k_max": k}


def verify_theorem44(
    m: int,
    max_length: int,
    bounds: Optional[Bounds] = None,
    stabilization: bool = True,
) -> Theorem44Report:
    """Compute the three bounded extended orders and compare them."""
    bounds = bounds or Bounds(max_length, 3)
    t0 = time.perf_counter()
    closures = {tag: extended_closure(tag, m, max_length, bounds) for tag in TAGS}
    oracle = dominance_pairs(m, max_length)
    witnesses = []
    for i, s in enumerate(TAGS):
        for t in TAGS[i + 1:]:
            for u, w in sorted(closures[s].pairs ^ closures[t].pairs):
                side = s if (u, w) in closures[s].pairs else t
                witnesses.append({
                    "pair": [from_vector(u).parts.to_json(), from_vector(w).parts.to_json()],
                    "only_in": side,
                    "compared": [s, t],
                })
    equal = not witnesses
    stabilized = {}
    if stabilization:
        for tag in TAGS:
            stabilized[tag] = _smallest_stable(tag, m, max_length, bounds, closures[tag].pairs)
    return Theorem44Report(
        m=m,
        max_length=max_length,
        bounds=bounds,
        equal=equal,
        matches_dominance={tag: closures[tag].pairs == oracle for tag in TAGS},
        witnesses=witnesses,
        stabilized_at=stabilized,
        sizes={tag: len(closures[tag].strict_pairs()) for tag in TAGS},
        seconds=time.perf_counter() - t0,
    )
