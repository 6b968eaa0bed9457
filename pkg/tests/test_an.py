import pytest

from degenlab import cyclic
from degenlab.an import (
    ANModule,
    ANRing,
    KappaClass,
    all_modules,
    classes_of_rank,
    cover_moves,
    deg_leq,
    from_cyclic,
    hasse_for_class,
    hasse_for_rank,
    kappa,
    modules_in_class,
    to_cyclic,
    transport,
)
from degenlab.cyclic import padded, padded_dominates
from degenlab.partitions import Partition, box_moves

A2 = ANRing(2, 2)
R3 = A2.module(3)
RPQ = A2.module(1, p=1, q=1)
P3 = A2.module(p=3)
Q3 = A2.module(q=3)


def test_ring_validation():
    with pytest.raises(ValueError):
        ANRing(2, 3)
    with pytest.raises(ValueError):
        ANRing(0, 2)
    with pytest.raises(ValueError):
        ANRing(2, 2, (1, 1))
    assert ANRing(2, 2).rank_table == (1, 1, 1)
    assert ANRing(3, 4).rank_table == (1, 2, 2, 2)
    assert ANRing(3, 4).note() and ANRing(3, 2).note() is None


def test_module_constructor_aliases():
    assert A2.module(1, p=1, q=1).mult == (1, 1, 1)
    assert ANRing(3, 2).module(I3=2).mult == (0, 0, 0, 2)
    with pytest.raises(ValueError, match="index exceeds n"):
        A2.module(I5=1)


@pytest.mark.parametrize("M,expected", [
    (RPQ, ((2, 1), 1)),
    (A2.module(p=3), ((1, 1, 1), 0)),
    (R3, ((), 3)),
])
def test_transport(M, expected):
    p, free = transport(M)
    assert (p.parts, free) == expected


@pytest.mark.parametrize("M,expected", [
    (A2.module(1, q=2), KappaClass(3, 1)),
    (R3, KappaClass(3, 0)),
    (A2.module(p=2, q=1), KappaClass(3, 1)),
    (A2.module(2, p=1), KappaClass(3, 1)),
])
def test_kappa(M, expected):
    assert kappa(M) == expected


def test_deg_leq_examples():
    assert deg_leq(R3, RPQ)
    assert deg_leq(RPQ, Q3)
    assert deg_leq(RPQ, P3)
    assert not deg_leq(A2.module(2, p=1), A2.module(2, q=1))
    assert not deg_leq(P3, Q3) and not deg_leq(Q3, P3)
    with pytest.raises(ValueError, match="ring mismatch"):
        deg_leq(R3, ANRing(3, 2).module(3))


def test_cover_moves_examples():
    assert cover_moves(RPQ) == {P3, Q3}
    assert cover_moves(P3) == set()
    assert cover_moves(R3) == {RPQ}


def test_hasse_for_class_examples():
    h = hasse_for_class(A2, kappa(R3), 3)
    assert h.labels == ["R^3", "R + p + q", "p^3", "q^3"]
    assert h.labelled_edges() == {("R^3", "R + p + q"), ("R + p + q", "p^3"), ("R + p + q", "q^3")}
    h = hasse_for_class(A2, kappa(A2.module(2, p=1)), 3)
    assert h.labelled_edges() == {("R^2 + p", "R + q^2"), ("R + q^2", "p^2 + q")}
    h = hasse_for_class(A2, kappa(A2.module(2, q=1)), 3)
    assert h.labelled_edges() == {("R^2 + q", "R + p^2"), ("R + p^2", "p + q^2")}


def test_hasse_bound_filters():
    h = hasse_for_class(A2, kappa(R3), 1)
    assert h.labels == []
    h = hasse_for_class(A2, KappaClass(1, 0), 1)
    assert h.labels == ["R"]


@pytest.mark.parametrize("n", range(1, 6))
def test_kappa_separates_components(n):
    ring = ANRing(n, 2)
    for rank in range(0, 5):
        h = hasse_for_rank(ring, rank, max_total_mult=4)
        seen = []
        for comp in h.components():
            ks = {kappa(h.nodes[k]) for k in comp}
            assert len(ks) == 1
            seen.append(ks.pop())
        assert len(seen) == len(set(seen))
        assert sorted(seen) == classes_of_rank(ring, rank)


@pytest.mark.parametrize("n", range(1, 6))
def test_deg_leq_is_a_partial_order(n):
    ring = ANRing(n, 2)
    mods = [M for M in all_modules(ring, 4 if n <= 3 else 3)]
    by_class = {}
    for M in mods:
        by_class.setdefault(kappa(M), []).append(M)
    for group in by_class.values():
        for M in group:
            assert deg_leq(M, M)
            for N in group:
                if M != N and deg_leq(M, N):
                    assert not deg_leq(N, M)
                    for K in group:
                        if deg_leq(N, K):
                            assert deg_leq(M, K)


@pytest.mark.parametrize("n", range(1, 6))
def test_cover_edges_are_single_padded_box_moves(n):
    ring = ANRing(n, 2)
    for rank in range(1, 5):
        h = hasse_for_rank(ring, rank)
        for a, b in h.edges:
            M, N = h.nodes[a], h.nodes[b]
            assert kappa(M) == kappa(N)
            assert M.total_mult == N.total_mult  # rank with rank(I_j) = 1
            ok, (x, y) = padded_dominates(transport(M)[0], transport(N)[0], ring.m)
            assert ok
            pM, pN = padded(transport(M)[0], ring.m, x), padded(transport(N)[0], ring.m, y)
            # the minimal padding balances the weights
            assert pM.weight == pN.weight
            assert pN in box_moves(pM)


@pytest.mark.parametrize("n", range(1, 5))
def test_dimension_zero_matches_cyclic_modules(n):
    ring = ANRing(n, 0)
    mods = list(all_modules(ring, 3))
    for M in mods:
        assert from_cyclic(ring, to_cyclic(M)) == M
        for N in mods:
            assert deg_leq(M, N) == cyclic.deg_leq(to_cyclic(M), to_cyclic(N))


def test_modules_in_class_enumeration():
    assert {M.label() for M in modules_in_class(A2, KappaClass(3, 1))} == {"R^2 + p", "R + q^2", "p^2 + q"}
    assert modules_in_class(A2, KappaClass(0, 0)) == [ANModule(A2)]


def test_json_roundtrip():
    M = A2.module(2, p=1)
    assert M.to_json() == {"n": 2, "d": 2, "mult": {"F": 2, "I1": 1}}
    assert ANModule.from_json(M.to_json()) == M


def test_experimental_rank_table_override():
    ring = ANRing(2, 4, (1, 1, 1))
    assert deg_leq(ring.module(3), ring.module(1, p=1, q=1))
    default = ANRing(2, 4)
    assert kappa(default.module(1, p=1)) == KappaClass(3, 1)
