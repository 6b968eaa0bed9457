"""Modules over k[[x]] and k[[x]]/(x^m) as partitions.

Every such module is a direct sum of cyclic modules R/(x^a), so it is
recorded as the partition of its exponents together with the modulus of
the ring.  The modulus ``None`` stands for k[[x]] itself.  Over
k[[x]]/(x^m) a part equal to ``m`` is a free summand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .partitions import Partition, dominates, partitions_of

INFINITE = None


def format_modulus(m: Optional[int]) -> str:
    return "inf" if m is None else str(m)


def parse_modulus(text) -> Optional[int]:
    if text is None or str(text).strip().lower() in ("inf", "infinite", "oo"):
        return INFINITE
    m = int(text)
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    return m


@dataclass(frozen=True)
class CyclicModule:
    parts: Partition
    modulus: Optional[int] = INFINITE

    def __post_init__(self):
        if not isinstance(self.parts, Partition):
            object.__setattr__(self, "parts", Partition(self.parts))
        if self.modulus is not None:
            if self.modulus < 1:
                raise ValueError(f"modulus must be positive, got {self.modulus}")
            if self.parts and self.parts[0] > self.modulus:
                raise ValueError(
                    f"part {self.parts[0]} exceeds modulus {self.modulus}"
                )

    @property
    def length(self) -> int:
        return self.parts.weight

    def __add__(self, other: "CyclicModule") -> "CyclicModule":
        if other.modulus != self.modulus:
            raise ValueError("modulus mismatch")
        return CyclicModule(self.parts.union(other.parts), self.modulus)

    def __str__(self) -> str:
        return f"{self.parts} mod {format_modulus(self.modulus)}"

    def to_json(self) -> dict:
        return {"modulus": "inf" if self.modulus is None else self.modulus,
                "parts": self.parts.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "CyclicModule":
        return cls(Partition(data["parts"]), parse_modulus(data.get("modulus")))


@dataclass(frozen=True)
class ExtWitness:
    """A short exact sequence 0 -> sub -> mid -> quot -> 0 of cyclic sums."""

    sub: CyclicModule
    mid: CyclicModule
    quot: CyclicModule
    map_description: str
    result: CyclicModule

    def __post_init__(self):
        if self.mid.length != self.sub.length + self.quot.length:
            raise ValueError("lengths do not add up")


def fitting_exponents(M: CyclicModule) -> list[int]:
    """Exponents ``e_i`` with ``Fitt_i(M) = (x^e_i)``, ending at the unit ideal."""
    if M.modulus is not None:
        raise ValueError("Fitting exponents are defined here over k[[x]] only")
    parts = M.parts.parts
    out = [sum(parts[i:]) for i in range(len(parts))]
    out.append(0)
    return out


def deg_leq(M: CyclicModule, N: CyclicModule) -> bool:
    """Whether ``M`` degenerates to ``N`` (equivalently, by extensions)."""
    if M.modulus != N.modulus:
        raise ValueError(
            f"modulus mismatch: {format_modulus(M.modulus)} vs {format_modulus(N.modulus)}"
        )
    return M.length == N.length and dominates(M.parts, N.parts)


def ext_step_witness(M: CyclicModule, a: int, b: int) -> ExtWitness:
    """Split off R/(x^a) + R/(x^b) and replace it by R/(x^(a-1)) + R/(x^(b+1)).

    ``b = 0`` is allowed and reads R/(x^0) as the zero module.
    """
    if a < b + 2:
        raise ValueError(f"split move: a={a}, b={b} needs a >= b + 2")
    rest = list(M.parts.parts)
    for c in (a, b):
        if c == 0:
            continue
        if c not in rest:
            raise ValueError(f"part {c} not present in {M.parts}")
        rest.remove(c)
    m = M.modulus
    return ExtWitness(
        sub=CyclicModule(Partition([a - 1]), m),
        mid=CyclicModule(Partition([a, b]), m),
        quot=CyclicModule(Partition([b + 1]), m),
        map_description="1 -> (x, 1)",
        result=CyclicModule(Partition(rest + [a - 1, b + 1]), m),
    )


def stable_reduce(M: CyclicModule) -> tuple[Partition, int]:
    """Drop free summands: return (non-free parts, number of free parts)."""
    m = M.modulus
    if m is None:
        raise ValueError("stable reduction needs a finite modulus")
    free = sum(1 for a in M.parts if a == m)
    return Partition(a for a in M.parts if a < m), free


def padded(p: Iterable[int], m: int, copies: int) -> Partition:
    return Partition(list(p) + [m] * copies)


def padded_dominates(p: Partition, q: Partition, m: int) -> tuple[bool, Optional[tuple[int, int]]]:
    """Dominance after padding both sides with parts equal to ``m``.

    Returns ``(answer, (a, b))`` where ``(a, b)`` is the minimal padding
    equalizing weights, or ``(False, None)`` when no padding does.
    """
    if m < 1:
        raise ValueError("m must be positive")
    p, _ = stable_reduce(CyclicModule(p, m))
    q, _ = stable_reduce(CyclicModule(q, m))
    diff = q.weight - p.weight
    if diff % m:
        return False, None
    a, b = (diff // m, 0) if diff >= 0 else (0, -diff // m)
    return dominates(padded(p, m, a), padded(q, m, b)), (a, b)


def modules_of_length(n: int, modulus: Optional[int] = INFINITE) -> list[CyclicModule]:
    return [CyclicModule(p, modulus) for p in partitions_of(n, modulus)]
