"""Brute-force reference computations, independent of the library code paths."""

from collections import deque
from itertools import combinations_with_replacement, product


def all_partitions(n):
    """Every partition of n as a decreasing tuple, by filtering multisets."""
    out = set()
    for k in range(0, n + 1):
        for combo in combinations_with_replacement(range(1, n + 1), k):
            if sum(combo) == n:
                out.add(tuple(sorted(combo, reverse=True)))
    return sorted(out, reverse=True)


def dom(p, q):
    """Dominance by definition, padding with zeros."""
    L = max(len(p), len(q))
    p = list(p) + [0] * (L - len(p))
    q = list(q) + [0] * (L - len(q))
    sp = sq = 0
    for a, b in zip(p, q):
        sp += a
        sq += b
        if sp < sq:
            return False
    return True


def covers_by_definition(n):
    """Pairs (p, q) with p > q and nothing strictly in between."""
    parts = all_partitions(n)
    out = set()
    for p in parts:
        for q in parts:
            if p == q or not dom(p, q):
                continue
            if not any(r not in (p, q) and dom(p, r) and dom(r, q) for r in parts):
                out.add((p, q))
    return out


def raw_box_moves(p):
    """All single moves of one box to a lower row, no validity filter beyond shape."""
    rows = list(p) + [0]
    out = set()
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            new = rows[:]
            new[i] -= 1
            new[j] += 1
            t = tuple(sorted((a for a in new if a), reverse=True))
            if t != tuple(p) and list(new) == sorted(new, reverse=True):
                out.add(t)
    return out


def reachable(start, step):
    seen = {start}
    todo = deque([start])
    while todo:
        x = todo.popleft()
        for y in step(x):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def ar_delta(m, a):
    v = [0] * m
    v[a - 1] = 2
    if a >= 2:
        v[a - 2] = -1
    v[a] = -1
    return v


def brute_decompose(m, g, cap=8):
    """All non-negative integer c in [0, cap]^(m-1) with sum c_a delta_a = g."""
    sols = []
    for c in product(range(cap + 1), repeat=m - 1):
        tot = [0] * m
        for a, k in enumerate(c, start=1):
            for i, x in enumerate(ar_delta(m, a)):
                tot[i] += k * x
        if tot == list(g):
            sols.append(c)
    return sols


def det(A):
    """Integer determinant by cofactor expansion."""
    if not A:
        return 1
    return sum((-1) ** j * A[0][j] * det([r[:j] + r[j + 1:] for r in A[1:]])
               for j in range(len(A)) if A[0][j])
