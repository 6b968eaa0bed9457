"""Maximal Cohen-Macaulay modules over even-dimensional (A_n) singularities.

The ring is ``k[[x_0, ..., x_d]] / (x_0^(n+1) + x_1^2 + ... + x_d^2)`` with
``d`` even.  Its indecomposable MCM modules are the free module ``F`` and
``I_1, ..., I_n``; a module is a multiplicity vector over them.

Applying Knorrer periodicity d/2 times identifies the stable category
with that of ``k[[x]]/(x^(n+1))``, sending ``I_j`` to ``k[[x]]/(x^j)``.
Degeneration is decided there: two modules are comparable iff their
Grothendieck classes agree and the transported partitions compare in the
dominance order after padding with free summands.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional, Sequence

from .cyclic import CyclicModule, padded_dominates
from .hasse import HasseDiagram
from .partitions import Partition


@dataclass(frozen=True)
class ANRing:
    n: int
    d: int = 2
    rank_table: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.d < 0 or self.d % 2:
            raise ValueError(f"only even dimension is supported, got d={self.d}")
        table = self.rank_table
        if table is None:
            table = default_rank_table(self.n, self.d)
        table = tuple(int(r) for r in table)
        if len(table) != self.n + 1 or any(r < 1 for r in table):
            raise ValueError(f"rank_table needs {self.n + 1} positive entries (F, I_1..I_n)")
        object.__setattr__(self, "rank_table", table)

    @property
    def m(self) -> int:
        """Modulus of the artinian ring reached by Knorrer transport."""
        return self.n + 1

    @property
    def experimental(self) -> bool:
        return self.d >= 4

    def note(self) -> Optional[str]:
        if self.d >= 4:
            return (
                "d >= 4: Grothendieck-class invariant and ranks of I_j are "
                "unvalidated extrapolations; treat results as experimental"
            )
        return None

    def atom_names(self) -> list[str]:
        if self.n == 2:
            return ["R", "p", "q"]
        return ["R"] + [f"I{j}" for j in range(1, self.n + 1)]

    def module(self, free: int = 0, **mult: int) -> "ANModule":
        """``ring.module(2, I1=1)``; for n = 2 also ``p=``/``q=``."""
        vec = [free] + [0] * self.n
        alias = {"p": 1, "q": 2} if self.n == 2 else {}
        for key, k in mult.items():
            j = alias.get(key) or int(key.lstrip("I"))
            if not 1 <= j <= self.n:
                raise ValueError(f"index exceeds n: {key}")
            vec[j] += k
        return ANModule(self, tuple(vec))

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "rank_table": list(self.rank_table)}


def default_rank_table(n: int, d: int) -> tuple[int, ...]:
    if d == 0:
        # artinian case: "rank" is the length, so kappa matches length
        return tuple([n + 1] + list(range(1, n + 1)))
    if d == 2:
        return tuple([1] * (n + 1))
    return tuple([1] + [2 ** (d // 2 - 1)] * n)


@dataclass(frozen=True, order=True)
class KappaClass:
    rank: int
    theta: int

    def to_json(self) -> dict:
        return {"rank": self.rank, "theta": self.theta}


@dataclass(frozen=True)
class ANModule:
    ring: ANRing
    mult: tuple[int, ...] = field(default=())

    def __post_init__(self):
        mult = tuple(int(k) for k in self.mult) or (0,) * (self.ring.n + 1)
        if len(mult) != self.ring.n + 1:
            raise ValueError(f"expected {self.ring.n + 1} multiplicities, got {len(mult)}")
        if any(k < 0 for k in mult):
            raise ValueError("multiplicities must be non-negative")
        object.__setattr__(self, "mult", mult)

    @property
    def free_rank(self) -> int:
        return self.mult[0]

    @property
    def total_mult(self) -> int:
        return sum(self.mult)

    def __add__(self, other: "ANModule") -> "ANModule":
        if other.ring != self.ring:
            raise ValueError("ring mismatch")
        return ANModule(self.ring, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def label(self) -> str:
        names = self.ring.atom_names()
        terms = [
            name if k == 1 else f"{name}^{k}"
            for name, k in zip(names, self.mult) if k
        ]
        return " + ".join(terms) or "0"

    __str__ = label

    def to_json(self) -> dict:
        keys = ["F"] + [f"I{j}" for j in range(1, self.ring.n + 1)]
        return {
            "n": self.ring.n,
            "d": self.ring.d,
            "mult": {k: v for k, v in zip(keys, self.mult) if v},
        }

    @classmethod
    def from_json(cls, data: dict, ring: Optional[ANRing] = None) -> "ANModule":
        ring = ring or ANRing(data["n"], data.get("d", 2))
        mult = [0] * (ring.n + 1)
        for key, k in data.get("mult", {}).items():
            j = 0 if key == "F" else int(key.lstrip("I"))
            if not 0 <= j <= ring.n:
                raise ValueError(f"index exceeds n: {key}")
            mult[j] = k
        return cls(ring, tuple(mult))


def transport(M: ANModule) -> tuple[Partition, int]:
    """Stable image over k[[x]]/(x^(n+1)): one part ``j`` per copy of ``I_j``."""
    parts = [j for j in range(1, M.ring.n + 1) for _ in range(M.mult[j])]
    return Partition(parts), M.free_rank


def to_cyclic(M: ANModule) -> CyclicModule:
    """Read a module as a k[[x]]/(x^(n+1))-module, F becoming the free part."""
    p, free = transport(M)
    return CyclicModule(p.union([M.ring.m] * free), M.ring.m)


def from_cyclic(ring: ANRing, C: CyclicModule) -> ANModule:
    if C.modulus != ring.m:
        raise ValueError(f"modulus {C.modulus} does not match n + 1 = {ring.m}")
    mult = [0] * (ring.n + 1)
    for a in C.parts:
        mult[0 if a == ring.m else a] += 1
    return ANModule(ring, tuple(mult))


def kappa(M: ANModule) -> KappaClass:
    """Computable Grothendieck-class invariant ``(rank, sum j*mult(I_j) mod (n+1))``."""
    rank = sum(k * r for k, r in zip(M.mult, M.ring.rank_table))
    theta = sum(j * M.mult[j] for j in range(1, M.ring.n + 1)) % M.ring.m
    return KappaClass(rank, theta)


def deg_leq(M: ANModule, N: ANModule) -> bool:
    """Whether ``M`` degenerates to ``N`` (equivalently, by extensions)."""
    if M.ring != N.ring:
        raise ValueError("ring mismatch")
    if kappa(M) != kappa(N):
        return False
    ok, _ = padded_dominates(transport(M)[0], transport(N)[0], M.ring.m)
    return ok


def _vectors(ranks: Sequence[int], target: int) -> Iterator[tuple[int, ...]]:
    if not ranks:
        if target == 0:
            yield ()
        return
    r, rest = ranks[0], ranks[1:]
    for k in range(target // r, -1, -1):
        for tail in _vectors(rest, target - k * r):
            yield (k,) + tail


def modules_of_rank(ring: ANRing, rank: int, max_total_mult: Optional[int] = None) -> list[ANModule]:
    """All modules of the given rank, in decreasing lexicographic order."""
    out = [ANModule(ring, v) for v in _vectors(ring.rank_table, rank)]
    if max_total_mult is not None:
        out = [M for M in out if M.total_mult <= max_total_mult]
    return out


def modules_in_class(ring: ANRing, kap: KappaClass, max_total_mult: Optional[int] = None) -> list[ANModule]:
    return [M for M in modules_of_rank(ring, kap.rank, max_total_mult) if kappa(M) == kap]


def _covers_within(M: ANModule, pool: Sequence[ANModule]) -> set[ANModule]:
    below = [N for N in pool if N != M and deg_leq(M, N)]
    return {N for N in below if not any(K != N and deg_leq(K, N) for K in below)}


def cover_moves(M: ANModule) -> set[ANModule]:
    """Modules ``N`` that ``M`` degenerates to with nothing strictly between."""
    return _covers_within(M, modules_in_class(M.ring, kappa(M)))


def _ordered(mods: Sequence[ANModule]) -> list[ANModule]:
    return sorted(mods, key=lambda M: (kappa(M), tuple(-k for k in M.mult)))


def hasse_for_class(ring: ANRing, kap: KappaClass, max_total_mult: int) -> HasseDiagram:
    nodes = _ordered(modules_in_class(ring, kap, max_total_mult))
    return HasseDiagram.from_order(nodes, deg_leq, [M.label() for M in nodes])


def hasse_for_rank(ring: ANRing, rank: int, max_total_mult: Optional[int] = None) -> HasseDiagram:
    """Disjoint union of the class diagrams of all modules of one rank."""
    nodes = _ordered(modules_of_rank(ring, rank, max_total_mult))
    return HasseDiagram.from_order(nodes, deg_leq, [M.label() for M in nodes])


def classes_of_rank(ring: ANRing, rank: int) -> list[KappaClass]:
    return sorted({kappa(M) for M in modules_of_rank(ring, rank)})


def all_modules(ring: ANRing, max_total_mult: int) -> Iterator[ANModule]:
    for v in product(range(max_total_mult + 1), repeat=ring.n + 1):
        if sum(v) <= max_total_mult:
            yield ANModule(ring, v)
