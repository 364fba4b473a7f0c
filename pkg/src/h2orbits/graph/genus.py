"""Minimum orientable genus by exhaustive rotation-system enumeration.

Only usable on tiny graphs: the search space is the product of
``(deg(v) - 1)!`` over the vertices of each component.  Rotation systems are
enumerated in numpy batches; faces are the cycles of the permutation
``dart -> rho(reverse(dart))`` and are counted by pointer doubling.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from ..errors import BudgetExceeded
from .multigraph import MultiGraph, simplify

DEFAULT_BUDGET = 20_000_000
_BATCH = 1 << 16


def rotation_system_count(g: MultiGraph) -> int:
    s = simplify(g)
    return math.prod(math.factorial(max(d - 1, 0)) for d in s.degrees())


def genus_by_rotation_systems(g: MultiGraph, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum genus of ``simplify(g)``, summed over connected components.

    Raises BudgetExceeded when some component has more than ``budget``
    rotation systems.
    """
    s = simplify(g)
    total = 0
    for comp in s.components():
        total += _component_genus(s, comp, budget)
    return total


def _component_genus(g: MultiGraph, comp: list, budget: int) -> int:
    members = set(comp)
    edges = [(a, b) for a, b in g.edges if a in members]
    v, e = len(comp), len(edges)
    if e == 0:
        return 0
    # dart 2k runs a -> b along edge k, dart 2k + 1 runs b -> a
    tail = []
    for a, b in edges:
        tail += [a, b]
    D = 2 * e
    out = {x: [d for d in range(D) if tail[d] == x] for x in comp}

    tables = []  # (out darts, successor table of shape (options, deg))
    mirrored = False
    for x in comp:
        darts = out[x]
        if len(darts) <= 2:
            succ = np.array([[darts[(i + 1) % len(darts)] for i in range(len(darts))]], dtype=np.int16)
        else:
            rows = []
            for rest in itertools.permutations(darts[1:]):
                # reversing every ring preserves the face count; fix orientation at one vertex
                if not mirrored and rest > rest[::-1]:
                    continue
                ring = (darts[0],) + rest
                pos = {d: i for i, d in enumerate(ring)}
                rows.append([ring[(pos[d] + 1) % len(ring)] for d in darts])
            succ = np.array(rows, dtype=np.int16)
            mirrored = True
        tables.append((np.array(darts), succ))

    space = math.prod(t[1].shape[0] for t in tables)
    if space * (2 if mirrored else 1) > budget:
        raise BudgetExceeded(f"component with {v} vertices has {space * (2 if mirrored else 1)} rotation systems (budget {budget})")

    # Euler lower bound for simple connected graphs (faces have length >= 3)
    lower = max(0, math.ceil((e - 3 * v + 6) / 6)) if v >= 3 else 0
    rev = np.arange(D) ^ 1
    ident = np.arange(D, dtype=np.int16)
    steps = max(1, math.ceil(math.log2(D)))
    radices = [t[1].shape[0] for t in tables]
    best_faces = -1

    for start in range(0, space, _BATCH):
        idx = np.arange(start, min(start + _BATCH, space), dtype=np.int64)
        rho = np.empty((idx.size, D), dtype=np.int16)
        rem = idx
        for (darts, succ), r in zip(tables, radices):
            digit = rem % r
            rem = rem // r
            rho[:, darts] = succ[digit]
        phi = rho[:, rev]
        lab = np.broadcast_to(ident, phi.shape).copy()
        p = phi
        for _ in range(steps):
            lab = np.minimum(lab, np.take_along_axis(lab, p, axis=1))
            p = np.take_along_axis(p, p, axis=1)
        faces = int((lab == ident).sum(axis=1).max())
        if faces > best_faces:
            best_faces = faces
            genus = (2 - v + e - best_faces) // 2
            if genus <= lower:
                break
    return (2 - v + e - best_faces) // 2
