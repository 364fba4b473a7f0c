"""Planarity testing with a checked embedding."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .multigraph import MultiGraph, check_rotation, euler_genus_of_rotation, simplify


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    # vertex -> neighbors in clockwise order; None when non-planar
    embedding: dict | None = None

    def __bool__(self):
        return self.planar


def _to_networkx(g: MultiGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.num_vertices))
    G.add_edges_from(g.edges)
    return G


def is_planar(g: MultiGraph) -> PlanarityResult:
    """Left-right planarity test on the simplified graph.

    A positive answer comes with a rotation system whose face count is
    re-traced here and must satisfy Euler's formula with genus 0.
    """
    s = simplify(g)
    planar, emb = nx.check_planarity(_to_networkx(s))
    if not planar:
        return PlanarityResult(False)
    rotation = {v: list(emb.neighbors_cw_order(v)) for v in range(s.num_vertices)}
    check_rotation(s, rotation)
    genus = euler_genus_of_rotation(s, rotation)
    if genus != 0:
        raise RuntimeError(f"planarity tester returned an embedding of genus {genus}")
    return PlanarityResult(True, rotation)
