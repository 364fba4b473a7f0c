"""Orbit graphs of H(2) origamis under a generating pair of SL(2,Z)."""

from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass, field

from .errors import BudgetExceeded, InvalidCombination, SeedValidationFailed
from .origami import (
    CanonicalOrigami,
    Origami,
    _commutator_is_3cycle,
    _is_primitive_arrays,
    _is_transitive,
    canonical_encoding,
    format_origami,
    monodromy_class,
    origami_from_cycles,
    stratum,
)
from . import sl2
from .sl2 import GENERATOR_SETS, Generator, act_arrays, invert_word

ORBIT_LABELS = ("unique", "A", "B")


def normalize_orbit_label(label: str) -> str:
    key = label.strip()
    if key.lower() == "unique":
        return "unique"
    if key.upper() in ("A", "B"):
        return key.upper()
    raise InvalidCombination(f"unknown orbit {label!r}; expected unique, A or B")


def orbits_for(n: int) -> list:
    """Orbit labels that exist for ``n`` squares (primitive, in H(2))."""
    if n == 3 or (n >= 4 and n % 2 == 0):
        return ["unique"]
    if n >= 5 and n % 2 == 1:
        return ["A", "B"]
    return []


@dataclass
class OrbitGraph:
    """Directed, generator-labeled Schreier graph on canonical origamis.

    Every vertex has exactly one outgoing edge per label; vertex numbers
    follow BFS discovery order from the seed.
    """

    n: int
    generator_set: str
    vertices: list
    edges: list
    orbit: str | None = None
    seed: Origami | None = None
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self._index is None:
            self._index = {v.encoding: i for i, v in enumerate(self.vertices)}

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def loop_count(self) -> int:
        return sum(1 for s, t, _ in self.edges if s == t)

    @property
    def labels(self) -> tuple:
        return tuple(GENERATOR_SETS[self.generator_set])

    def index_of(self, o) -> int | None:
        """Vertex index of an origami or canonical form, ``None`` if absent."""
        if isinstance(o, Origami):
            if o.n != self.n:
                return None
            enc = tuple(x + 1 for x in canonical_encoding(o.h.array, o.v.array))
        else:
            enc = o.encoding
        return self._index.get(enc)

    def __contains__(self, o) -> bool:
        return self.index_of(o) is not None

    def origami(self, i: int) -> Origami:
        return self.vertices[i].to_origami()

    def successor(self, i: int, label: str) -> int:
        return self._succ()[(i, label)]

    def _succ(self):
        cache = getattr(self, "_succ_cache", None)
        if cache is None:
            cache = {(s, lab): t for s, t, lab in self.edges}
            object.__setattr__(self, "_succ_cache", cache)
        return cache

    def report(self) -> dict:
        return {
            "n": self.n,
            "orbit": self.orbit,
            "generators": self.generator_set,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "loop_count": self.loop_count,
            "seed": format_origami(self.seed) if self.seed is not None else None,
        }


def enumerate_orbit(
    seed: Origami,
    gens: str = "TS",
    orbit: str | None = None,
    *,
    expansion_order=None,
    deadline: float | None = None,
    max_vertices: int | None = None,
) -> OrbitGraph:
    """Breadth-first closure of ``seed`` under the generators and inverses.

    ``expansion_order`` optionally permutes the move list (labels and
    ``label + "^-1"``); it only affects vertex numbering.  ``deadline`` is an
    absolute :func:`time.monotonic` value.
    """
    if gens not in GENERATOR_SETS:
        raise InvalidCombination(f"unknown generator set {gens!r}; expected TS or PR")
    n = seed.n
    labeled = GENERATOR_SETS[gens]
    moves = []
    for label, word in labeled.items():
        moves.append((label, tuple(word)))
        moves.append((label + "^-1", invert_word(word)))
    if expansion_order is not None:
        by_name = dict(moves)
        moves = [(name, by_name[name]) for name in expansion_order]
        if sorted(by_name) != sorted(expansion_order):
            raise ValueError("expansion_order must list every move exactly once")
    forward = set(labeled)
    debug = sl2.debug_checks_enabled()

    start = canonical_encoding(seed.h.array, seed.v.array)
    index = {start: 0}
    keys = [start]
    edges = []
    queue = deque([0])
    steps = 0
    while queue:
        i = queue.popleft()
        key = keys[i]
        h, v = key[:n], key[n:]
        for name, word in moves:
            h2, v2 = act_arrays(word, h, v)
            if debug:
                before = Origami.from_arrays(h, v)
                sl2._check_invariants(before, Origami.from_arrays(h2, v2), name)
            k2 = canonical_encoding(h2, v2)
            j = index.get(k2)
            if j is None:
                j = len(keys)
                index[k2] = j
                keys.append(k2)
                queue.append(j)
                if max_vertices is not None and len(keys) > max_vertices:
                    raise BudgetExceeded(f"orbit exceeds {max_vertices} vertices")
            if name in forward:
                edges.append((i, j, name))
        steps += 1
        if deadline is not None and steps % 64 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded(f"orbit enumeration exceeded its time budget after {len(keys)} vertices")
    if expansion_order is not None:
        edges.sort(key=lambda e: (e[0], list(labeled).index(e[2])))
    vertices = [CanonicalOrigami(tuple(x + 1 for x in k), n) for k in keys]
    return OrbitGraph(n, gens, vertices, edges, orbit=orbit, seed=seed)


def standard_seed(n: int, orbit: str) -> Origami:
    """A validated starting origami for the requested orbit."""
    orbit = normalize_orbit_label(orbit)
    if orbit not in orbits_for(n):
        raise InvalidCombination(
            f"orbit {orbit!r} does not exist for n={n}; available: {orbits_for(n) or 'none'}"
        )
    if n == 3:
        seed = origami_from_cycles("(1,2,3)", "(1,3)", 3)
    elif orbit == "B" and n == 5:
        seed = origami_from_cycles("(1,2,3,4,5)", "(1,2,3)", 5)
    elif orbit == "B":
        seed = origami_from_cycles(
            f"({n - 2},{n - 1},{n})", "(" + ",".join(map(str, range(1, n - 1))) + ")", n
        )
    else:
        seed = origami_from_cycles(f"({n - 1},{n})", "(" + ",".join(map(str, range(1, n))) + ")", n)
    _validate_seed(seed, orbit)
    return seed


def _validate_seed(seed: Origami, orbit: str) -> None:
    if not stratum(seed).is_h2():
        raise SeedValidationFailed(f"seed {format_origami(seed)} is not in H(2)")
    mc = monodromy_class(seed)
    if not mc.is_primitive:
        raise SeedValidationFailed(f"seed {format_origami(seed)} is not primitive")
    both_even = mc.h_even and mc.v_even
    if orbit == "B" and not both_even:
        raise SeedValidationFailed(f"B-orbit seed {format_origami(seed)} has an odd generator")
    if orbit == "A" and both_even:
        raise SeedValidationFailed(f"A-orbit seed {format_origami(seed)} has no odd generator")


def t_orbit_length(o: Origami, limit: int | None = None) -> int:
    """Least k >= 1 with T^k(o) equivalent to o."""
    target = canonical_encoding(o.h.array, o.v.array)
    h, v = o.h.array, o.v.array
    limit = limit or 10 * o.n * o.n + 10
    for k in range(1, limit + 1):
        h, v = act_arrays((Generator.T,), h, v)
        if canonical_encoding(h, v) == target:
            return k
    raise BudgetExceeded(f"T-orbit of {format_origami(o)} longer than {limit}")


# -- exhaustive oracle --------------------------------------------------------

def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _class_representative(shape) -> tuple:
    img = list(range(sum(shape)))
    start = 0
    for length in shape:
        for k in range(length):
            img[start + k] = start + (k + 1) % length
        start += length
    return tuple(img)


def enumerate_all_h2(n: int, budget: int = 2_000_000, reduce_h: bool = True) -> list:
    """All primitive n-square origamis in H(2), up to simultaneous conjugation.

    With ``reduce_h`` the horizontal permutation runs over one representative
    per conjugacy class (every class of pairs has such a member) and ``v`` over
    all of Sym(n); otherwise both run over Sym(n).  ``budget`` caps the number
    of pairs examined.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if reduce_h:
        hs = [_class_representative(shape) for shape in _partitions(n)]
    else:
        hs = list(itertools.permutations(range(n)))
    total = len(hs) * _factorial(n)
    if total > budget:
        raise BudgetExceeded(f"exhaustive enumeration for n={n} needs {total} pairs (budget {budget})")
    found = set()
    for h in hs:
        for v in itertools.permutations(range(n)):
            if not _commutator_is_3cycle(h, v):
                continue
            if not _is_transitive(h, v) or not _is_primitive_arrays(h, v):
                continue
            found.add(canonical_encoding(h, v))
    return sorted(CanonicalOrigami(tuple(x + 1 for x in k), n) for k in found)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def orbit_partition(classes, gens: str = "TS") -> list:
    """Split canonical forms into orbits; returns a list of OrbitGraphs.

    Raises ValueError if an orbit leaves the given class set.
    """
    remaining = {c.encoding: c for c in classes}
    out = []
    for enc in sorted(remaining):
        if enc not in remaining:
            continue
        g = enumerate_orbit(remaining[enc].to_origami(), gens)
        for vert in g.vertices:
            if remaining.pop(vert.encoding, None) is None:
                raise ValueError(f"orbit leaves the given class set at {vert.serialize()}")
        out.append(g)
    return out
