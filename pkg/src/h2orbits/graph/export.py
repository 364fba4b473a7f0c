"""DOT and JSON serialization of orbit graphs."""

from __future__ import annotations

import json

from ..orbit import OrbitGraph
from ..origami import CanonicalOrigami, parse_origami


def export_dot(g: OrbitGraph) -> str:
    lines = ["digraph orbit {"]
    for i, vert in enumerate(g.vertices):
        lines.append(f'  v{i} [tooltip="{vert.serialize()}"];')
    for s, t, label in g.edges:
        lines.append(f'  v{s} -> v{t} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def orbit_to_dict(g: OrbitGraph) -> dict:
    out = g.report()
    out["vertices"] = [v.serialize() for v in g.vertices]
    out["edges"] = [[s, t, label] for s, t, label in g.edges]
    return out


def export_json(g: OrbitGraph) -> str:
    return json.dumps(orbit_to_dict(g), indent=2) + "\n"


def import_json(text: str) -> OrbitGraph:
    data = json.loads(text)
    n = data["n"]
    vertices = [CanonicalOrigami.parse(s) for s in data["vertices"]]
    for v in vertices:
        if v.n != n:
            raise ValueError(f"vertex {v.serialize()} does not have {n} squares")
    edges = [(int(s), int(t), str(label)) for s, t, label in data["edges"]]
    seed = parse_origami(data["seed"]) if data.get("seed") else None
    return OrbitGraph(n, data["generators"], vertices, edges, orbit=data.get("orbit"), seed=seed)
