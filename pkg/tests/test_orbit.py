import itertools
from collections import Counter

import pytest

from h2orbits.errors import BudgetExceeded, InvalidCombination
from h2orbits.minors import build_family
from h2orbits.orbit import (
    enumerate_all_h2,
    enumerate_orbit,
    orbit_partition,
    orbits_for,
    standard_seed,
    t_orbit_length,
)
from h2orbits.origami import monodromy_class, origami_from_cycles, stratum
from h2orbits.sl2 import Generator, apply_word


def vertex_set(g):
    return {v.encoding for v in g.vertices}


def test_standard_seed_examples():
    assert standard_seed(6, "unique") == origami_from_cycles("(5,6)", "(1,2,3,4,5)", 6)
    assert standard_seed(3, "unique") == origami_from_cycles("(1,2,3)", "(1,3)", 3)
    b5 = standard_seed(5, "B")
    assert b5 == origami_from_cycles("(1,2,3,4,5)", "(1,2,3)", 5)
    mc = monodromy_class(b5)
    assert mc.h_even and mc.v_even and stratum(b5).is_h2()
    assert standard_seed(9, "b") == origami_from_cycles("(7,8,9)", "(1,2,3,4,5,6,7)", 9)


@pytest.mark.parametrize("n, orbit", [(6, "A"), (5, "unique"), (4, "B"), (2, "unique"), (7, "C")])
def test_standard_seed_invalid(n, orbit):
    with pytest.raises(InvalidCombination):
        standard_seed(n, orbit)


def test_G3_matches_exhaustive_classes():
    g = enumerate_orbit(standard_seed(3, "unique"))
    assert vertex_set(g) == {c.encoding for c in enumerate_all_h2(3)}
    assert g.vertex_count == 3


def test_G5_A_and_B_partition_all_classes():
    a = enumerate_orbit(standard_seed(5, "A"))
    b = enumerate_orbit(standard_seed(5, "B"))
    everything = {c.encoding for c in enumerate_all_h2(5)}
    assert not vertex_set(a) & vertex_set(b)
    assert vertex_set(a) | vertex_set(b) == everything


@pytest.mark.parametrize("gens", ["TS", "PR"])
@pytest.mark.parametrize("n", range(3, 12))
def test_orbit_graph_is_4_valent_and_closed(n, gens):
    for orbit in orbits_for(n):
        g = enumerate_orbit(standard_seed(n, orbit), gens, orbit)
        out = Counter((s, lab) for s, _, lab in g.edges)
        inc = Counter((t, lab) for _, t, lab in g.edges)
        for i in range(g.vertex_count):
            for lab in g.labels:
                assert out[(i, lab)] == 1 and inc[(i, lab)] == 1
        assert len(vertex_set(g)) == g.vertex_count
        # closure: every generator image of every vertex is a vertex
        for i in range(0, g.vertex_count, max(1, g.vertex_count // 20)):
            o = g.origami(i)
            for w in (
                (Generator.T,), (Generator.S,), (Generator.Tinv,), (Generator.Sinv,)
            ):
                assert apply_word(w, o) in g


def test_PR_vertex_set_equals_TS():
    for n in range(3, 14):
        for orbit in orbits_for(n):
            seed = standard_seed(n, orbit)
            assert vertex_set(enumerate_orbit(seed, "TS")) == vertex_set(enumerate_orbit(seed, "PR"))


def test_expansion_order_only_renumbers():
    seed = standard_seed(9, "A")
    base = enumerate_orbit(seed)
    for order in itertools.permutations(["T", "S", "T^-1", "S^-1"]):
        g = enumerate_orbit(seed, expansion_order=list(order))
        assert vertex_set(g) == vertex_set(base)
        relabel = {i: base.index_of(v) for i, v in enumerate(g.vertices)}
        assert sorted((relabel[s], relabel[t], lab) for s, t, lab in g.edges) == sorted(base.edges)


def test_orbit_a_and_b_parity_split():
    for n in (5, 7, 9, 11):
        a = enumerate_orbit(standard_seed(n, "A"))
        b = enumerate_orbit(standard_seed(n, "B"))
        assert not vertex_set(a) & vertex_set(b)
        for i in range(a.vertex_count):
            mc = monodromy_class(a.origami(i))
            assert not (mc.h_even and mc.v_even)
        for i in range(b.vertex_count):
            mc = monodromy_class(b.origami(i))
            assert mc.h_even and mc.v_even


def test_enumerate_all_reduced_matches_full_pairs():
    for n in (3, 4):
        assert enumerate_all_h2(n) == enumerate_all_h2(n, reduce_h=False)


def test_enumerate_all_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_all_h2(7, budget=1000)


def test_enumerate_budget_guards():
    with pytest.raises(BudgetExceeded):
        enumerate_orbit(standard_seed(12, "unique"), max_vertices=50)
    with pytest.raises(BudgetExceeded):
        enumerate_orbit(standard_seed(14, "unique"), deadline=0.0)


def test_orbit_partition_n4_single():
    parts = orbit_partition(enumerate_all_h2(4))
    assert [p.vertex_count for p in parts] == [9]


def test_t_orbit_length_examples():
    for n in (4, 6, 8, 10):
        fam = build_family("even", n)
        assert t_orbit_length(fam.branch[4]) == n
        assert t_orbit_length(fam.branch[6]) == n - 1
    for n in (7, 9, 11):
        fam = build_family("B", n)
        assert t_orbit_length(apply_word((Generator.Sinv,), fam.branch[2])) == n


def test_report_fields():
    g = enumerate_orbit(standard_seed(5, "B"), "TS", "B")
    r = g.report()
    assert set(r) == {"n", "orbit", "generators", "vertex_count", "edge_count", "loop_count", "seed"}
    assert r["edge_count"] == 2 * r["vertex_count"]
    assert r["seed"] == "h=(1,2,3,4,5); v=(1,2,3); n=5"
    assert r["loop_count"] == sum(1 for s, t, _ in g.edges if s == t)
