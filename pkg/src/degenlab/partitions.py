"""Integer partitions and the dominance order.

A partition is the exponent data of a module over k[[x]]; dominance of
partitions is the degeneration order of the corresponding modules, read
in the same direction (the larger partition degenerates to the smaller).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

from .hasse import HasseDiagram


class Partition(Sequence[int]):
    """Weakly decreasing tuple of positive integers.

    Input is sorted and zeros are dropped, so ``Partition([1, 3, 0])``
    equals ``Partition([3, 1])``.
    """

    __slots__ = ("_parts", "_weight")

    def __init__(self, parts: Iterable[int] = ()):
        parts = [int(a) for a in parts]
        if any(a < 0 for a in parts):
            raise ValueError(f"negative part in {parts}")
        self._parts = tuple(sorted((a for a in parts if a), reverse=True))
        self._weight = sum(self._parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        return self._weight

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, i):
        return self._parts[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        if isinstance(other, tuple):
            return self._parts == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Partition", self._parts))

    def __lt__(self, other: "Partition") -> bool:
        # lexicographic, used only for deterministic ordering
        return self._parts < other._parts

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self._parts)) + ")"

    def part(self, i: int) -> int:
        """The ``i``-th part (0-based), reading missing parts as 0."""
        return self._parts[i] if i < len(self._parts) else 0

    def partial_sums(self, length: int | None = None) -> list[int]:
        n = len(self._parts) if length is None else length
        return list(accumulate(self.part(i) for i in range(n)))

    def union(self, other: Iterable[int]) -> "Partition":
        """Multiset union of parts (direct sum of the modules)."""
        return Partition(self._parts + tuple(other))

    def conjugate(self) -> "Partition":
        if not self._parts:
            return Partition()
        return Partition(
            sum(1 for a in self._parts if a > i) for i in range(self._parts[0])
        )

    def to_json(self) -> list[int]:
        return list(self._parts)


def dominates(p: Partition, q: Partition) -> bool:
    """True iff every partial sum of ``p`` is at least that of ``q``."""
    if p.weight != q.weight:
        raise ValueError(
            f"incomparable weights: {p} has weight {p.weight}, {q} has {q.weight}"
        )
    n = max(len(p), len(q))
    return all(a >= b for a, b in zip(p.partial_sums(n), q.partial_sums(n)))


def box_move(p: Partition, i: int, j: int) -> Partition:
    """Move one box from row ``i`` down to row ``j`` (1-based, ``i < j``).

    ``j`` may be ``len(p) + 1``, which opens a new row of length 1.
    """
    if not (1 <= i < j <= len(p) + 1) or p.part(i - 1) - p.part(j - 1) < 2:
        raise ValueError(f"not a valid box move: {p}, i={i}, j={j}")
    parts = list(p.parts) + [0]
    parts[i - 1] -= 1
    parts[j - 1] += 1
    return Partition(parts)


def box_moves(p: Partition) -> set[Partition]:
    """All results of a single box move on ``p``."""
    out = set()
    for i in range(1, len(p) + 1):
        for j in range(i + 1, len(p) + 2):
            if p.part(i - 1) - p.part(j - 1) >= 2:
                out.add(box_move(p, i, j))
    return out


def predecessors(p: Partition) -> set[Partition]:
    """Partitions covered by ``p`` in the dominance order.

    Every cover of ``p`` is reached by a single box move, so the covers are
    the box-move results not dominating another box-move result.
    """
    candidates = box_moves(p)
    return {
        q for q in candidates
        if not any(r != q and dominates(r, q) for r in candidates)
    }


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for head in range(min(n, largest), 0, -1):
        for tail in _partitions_bounded(n - head, head):
            yield (head,) + tail


@lru_cache(maxsize=None)
def _partitions_cached(n: int, largest: int) -> tuple[Partition, ...]:
    return tuple(Partition(t) for t in _partitions_bounded(n, largest))


def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n``, in decreasing lexicographic order.

    ``max_part`` bounds the parts, e.g. for modules over k[[x]]/(x^m).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return _partitions_cached(n, n if max_part is None else min(n, max_part))


def dominance_hasse(n: int) -> HasseDiagram:
    """Hasse diagram of the dominance order on partitions of ``n``."""
    nodes = list(partitions_of(n))
    index = {p: k for k, p in enumerate(nodes)}
    edges = [(index[p], index[q]) for p in nodes for q in sorted(predecessors(p), reverse=True)]
    return HasseDiagram(nodes, edges, [str(p) for p in nodes])
