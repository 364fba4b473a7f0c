import itertools
import json
import random

import numpy as np
import pytest

from h2orbits.errors import BudgetExceeded, NotConnected
from h2orbits.graph import (
    MinorCertificate,
    MultiGraph,
    count_faces,
    export_dot,
    export_json,
    genus_by_rotation_systems,
    import_json,
    is_planar,
    simplify,
    spectral_gap,
    spectral_probe,
    verify_k33_certificate,
)
from h2orbits.graph.multigraph import euler_genus_of_rotation
from h2orbits.graph.spectral import adjacency_matrix
from h2orbits.orbit import enumerate_orbit, orbits_for, standard_seed


def complete(n):
    return MultiGraph(n, tuple(itertools.combinations(range(n), 2)))


K4, K5 = complete(4), complete(5)
K33 = MultiGraph(6, tuple((a, b) for a in range(3) for b in range(3, 6)))


def orbit_graph(n, orbit, gens="TS"):
    return MultiGraph.from_orbit(enumerate_orbit(standard_seed(n, orbit), gens, orbit))


def test_simplify():
    g = MultiGraph(1, ((0, 0), (0, 0)))
    s = simplify(g)
    assert s.num_vertices == 1 and s.edges == ()
    doubled = MultiGraph(6, K33.edges + tuple((b, a) for a, b in K33.edges))
    assert sorted(simplify(doubled).edges) == sorted(K33.edges)


def test_orbit_graphs_simplify_to_degree_at_most_4():
    for n in range(3, 10):
        for orbit in orbits_for(n):
            g = orbit_graph(n, orbit)
            assert all(d == 4 for d in g.degrees())
            s = simplify(g)
            assert s.is_simple() and max(s.degrees()) <= 4


def test_multigraph_rejects_bad_endpoint():
    with pytest.raises(ValueError):
        MultiGraph(2, ((0, 2),))


def test_planarity_classics():
    assert is_planar(K4).planar
    assert not is_planar(K33).planar
    assert not is_planar(K5).planar
    assert is_planar(MultiGraph(3, ())).planar


@pytest.mark.parametrize("n, orbit", [(3, "unique"), (5, "B")])
def test_exceptional_orbits_planar_with_euler_embedding(n, orbit):
    g = orbit_graph(n, orbit)
    r = is_planar(g)
    assert r.planar
    s = simplify(g)
    faces = count_faces(r.embedding)
    assert s.num_vertices - len(s.edges) + faces == 2
    assert euler_genus_of_rotation(s, r.embedding) == 0


def test_planar_embedding_euler_on_disconnected_graph():
    g = MultiGraph(8, K4.edges + tuple((a + 4, b + 4) for a, b in K4.edges))
    r = is_planar(g)
    assert r.planar
    # each component contributes v - e + f = 2
    assert 8 - 12 + count_faces(r.embedding) == 4


def test_genus_oracle_values():
    assert genus_by_rotation_systems(K4) == 0
    assert genus_by_rotation_systems(K5) == 1
    assert genus_by_rotation_systems(K33) == 1
    assert genus_by_rotation_systems(MultiGraph(4, ())) == 0
    # two disjoint K5 copies: genus adds over components
    two = MultiGraph(10, K5.edges + tuple((a + 5, b + 5) for a, b in K5.edges))
    assert genus_by_rotation_systems(two) == 2


def test_genus_oracle_budget():
    with pytest.raises(BudgetExceeded):
        genus_by_rotation_systems(complete(7), budget=1000)


def random_4_regular(rng, v):
    stubs = [x for x in range(v) for _ in range(4)]
    rng.shuffle(stubs)
    return MultiGraph(v, tuple(zip(stubs[::2], stubs[1::2])))


def test_planarity_agrees_with_genus_oracle_small_sample():
    rng = random.Random(123)
    for _ in range(60):
        g = random_4_regular(rng, rng.randint(2, 6))
        assert is_planar(g).planar == (genus_by_rotation_systems(g) == 0)
        assert is_planar(g).planar == is_planar(simplify(g)).planar


def test_k33_certificate_on_k33():
    paths = {(i, j): [i, 3 + j] for i in range(3) for j in range(3)}
    cert = MinorCertificate((0, 1, 2), (3, 4, 5), paths)
    assert verify_k33_certificate(K33, cert)


def subdivided_k33():
    # K_{3,3} with edge (0,3) subdivided by 6 and (1,4) by 7
    edges = [e for e in K33.edges if e not in ((0, 3), (1, 4))] + [(0, 6), (6, 3), (1, 7), (7, 4)]
    g = MultiGraph(8, tuple(edges))
    paths = {(i, j): [i, 3 + j] for i in range(3) for j in range(3)}
    paths[(0, 0)] = [0, 6, 3]
    paths[(1, 1)] = [1, 7, 4]
    return g, paths


def test_k33_certificate_subdivision_and_failures():
    g, paths = subdivided_k33()
    assert verify_k33_certificate(g, MinorCertificate((0, 1, 2), (3, 4, 5), paths))
    assert not is_planar(g).planar

    clash = dict(paths)
    g2 = MultiGraph(8, g.edges + ((1, 6), (6, 4)))
    clash[(1, 1)] = [1, 6, 4]
    verdict = verify_k33_certificate(g2, MinorCertificate((0, 1, 2), (3, 4, 5), clash))
    assert not verdict and "shares interior vertex 6" in verdict.diagnostic

    broken = dict(paths)
    broken[(2, 2)] = [2, 3]
    verdict = verify_k33_certificate(g, MinorCertificate((0, 1, 2), (3, 4, 5), broken))
    assert not verdict and "path (2,2)" in verdict.diagnostic

    through = dict(paths)
    through[(0, 0)] = [0, 4, 3]
    verdict = verify_k33_certificate(g, MinorCertificate((0, 1, 2), (3, 4, 5), through))
    assert not verdict

    assert not verify_k33_certificate(g, MinorCertificate((0, 1, 2), (3, 4, 4), paths))


def test_k33_certificate_rejects_loop_steps():
    g = MultiGraph(6, K33.edges + ((0, 0),))
    paths = {(i, j): [i, 3 + j] for i in range(3) for j in range(3)}
    paths[(0, 0)] = [0, 0, 3]
    assert not verify_k33_certificate(g, MinorCertificate((0, 1, 2), (3, 4, 5), paths))


def test_spectral_k5_against_dense_oracle():
    p = spectral_probe(K5)
    assert abs(p.lambda_2 - (-1.0)) < 1e-9
    assert p.gap == 1.0  # 1 - (-1)/4 = 1.25, clamped


def doubled_cycle(n):
    edges = [(i, (i + 1) % n) for i in range(n)]
    return MultiGraph(n, tuple(edges + edges))


def test_doubled_cycle_gap_shrinks():
    gaps = []
    for n in (8, 16, 32):
        g = doubled_cycle(n)
        ev = np.linalg.eigvalsh(adjacency_matrix(g).toarray())
        assert abs(spectral_gap(g) - (1 - ev[-2] / 4)) < 1e-9
        assert abs(spectral_gap(g) - (1 - np.cos(2 * np.pi / n))) < 1e-9
        gaps.append(spectral_gap(g))
    assert gaps[0] > gaps[1] > gaps[2] > 0


def test_spectral_G4_baseline():
    p = spectral_probe(orbit_graph(4, "unique"))
    assert p.method == "lanczos"
    assert abs(p.gap - 0.5) < 1e-9


def test_lanczos_matches_dense_on_orbits():
    for n, orbit in [(9, "A"), (11, "B"), (12, "unique")]:
        g = orbit_graph(n, orbit)
        ev = np.linalg.eigvalsh(adjacency_matrix(g).toarray())
        p = spectral_probe(g)
        assert abs(p.lambda_2 - ev[-2]) < 1e-9
        assert abs(p.lambda_min - ev[0]) < 1e-9


def test_spectral_requires_connected():
    with pytest.raises(NotConnected):
        spectral_gap(MultiGraph(8, K4.edges + tuple((a + 4, b + 4) for a, b in K4.edges)))


def test_export_dot_G3():
    og = enumerate_orbit(standard_seed(3, "unique"), "TS", "unique")
    dot = export_dot(og)
    assert dot.startswith("digraph orbit {")
    assert dot.count("[tooltip=") == og.vertex_count == 3
    for i in range(3):
        assert f'v{i} -> ' in dot
        assert sum(1 for line in dot.splitlines() if line.strip().startswith(f"v{i} ->")) == 2
    assert dot.count('label="T"') == 3 and dot.count('label="S"') == 3
    assert export_dot(og) == dot


def test_json_round_trip():
    for gens in ("TS", "PR"):
        og = enumerate_orbit(standard_seed(7, "B"), gens, "B")
        text = export_json(og)
        back = import_json(text)
        assert back.vertices == og.vertices and back.edges == og.edges
        assert back.n == og.n and back.generator_set == gens and back.orbit == "B"
        assert back.seed == og.seed
        assert export_json(back) == text
        data = json.loads(text)
        assert {"n", "orbit", "generators", "vertex_count", "edge_count", "loop_count", "seed", "edges"} <= set(data)
        assert all(label in ("T", "S", "P", "R") for _, _, label in data["edges"])
