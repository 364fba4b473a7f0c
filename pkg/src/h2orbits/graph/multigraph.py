"""Undirected multigraphs and rotation-system face tracing."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class MultiGraph:
    """Vertices ``0..num_vertices-1`` and an edge multiset of unordered pairs.

    Loops are pairs ``(u, u)``; parallel edges are repeated pairs.
    """

    num_vertices: int
    edges: tuple

    def __post_init__(self):
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        for a, b in edges:
            if not (0 <= a < self.num_vertices and 0 <= b < self.num_vertices):
                raise ValueError(f"edge ({a}, {b}) has an endpoint outside 0..{self.num_vertices - 1}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_orbit(cls, orbit) -> "MultiGraph":
        return cls(orbit.vertex_count, tuple((s, t) for s, t, _ in orbit.edges))

    def degrees(self) -> list:
        """Degrees with a loop counted twice."""
        deg = [0] * self.num_vertices
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def neighbors(self) -> list:
        """Neighbor sets, ignoring loops and multiplicity."""
        nb = [set() for _ in range(self.num_vertices)]
        for a, b in self.edges:
            if a != b:
                nb[a].add(b)
                nb[b].add(a)
        return nb

    def components(self) -> list:
        """Vertex lists of the connected components, each sorted."""
        nb = self.neighbors()
        seen = [False] * self.num_vertices
        out = []
        for s in range(self.num_vertices):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in nb[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.num_vertices > 0 and len(self.components()) == 1

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self.edges:
            key = (min(a, b), max(a, b))
            if a == b or key in seen:
                return False
            seen.add(key)
        return True


def simplify(g: MultiGraph) -> MultiGraph:
    """Drop loops and collapse parallel edges."""
    seen = set()
    edges = []
    for a, b in g.edges:
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key not in seen:
            seen.add(key)
            edges.append(key)
    return MultiGraph(g.num_vertices, tuple(edges))


def count_faces(rotation: dict) -> int:
    """Number of faces of the embedding of a simple graph given by a rotation
    system ``{vertex: [neighbors in cyclic order]}``."""
    succ = {}
    for v, ring in rotation.items():
        k = len(ring)
        for i, w in enumerate(ring):
            succ[(v, w)] = ring[(i + 1) % k]
    seen = set()
    faces = 0
    for dart in succ:
        if dart in seen:
            continue
        faces += 1
        d = dart
        while d not in seen:
            seen.add(d)
            u, w = d
            d = (w, succ[(w, u)])
    return faces


def euler_genus_of_rotation(g: MultiGraph, rotation: dict) -> int:
    """Orientable genus of the embedding of simple ``g`` described by
    ``rotation``; summed over connected components."""
    v = g.num_vertices
    e = len(g.edges)
    f = count_faces(rotation)
    c = len(g.components())
    # sum over components of (2 - v_i + e_i - f_i) / 2, isolated vertices contribute one face each
    isolated = sum(1 for d in g.degrees() if d == 0)
    twice = 2 * c - v + e - (f + isolated)
    if twice % 2:
        raise ValueError("inconsistent rotation system")
    return twice // 2


def check_rotation(g: MultiGraph, rotation: dict) -> None:
    """Raise ValueError unless ``rotation`` lists each vertex's neighbors once."""
    nb = g.neighbors()
    for v in range(g.num_vertices):
        ring = rotation.get(v, [])
        if len(ring) != len(set(ring)) or set(ring) != nb[v]:
            raise ValueError(f"rotation at vertex {v} is not an ordering of its neighbors")
