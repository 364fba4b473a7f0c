"""Origamis as permutation pairs (h, v) on the squares {1..n}.

``h(i) = j`` when the right side of square i is glued to the left side of
square j; ``v(i) = j`` when the top of i is glued to the bottom of j.  Two
pairs describe the same surface when they differ by a simultaneous
conjugation, which :func:`canonical_form` detects.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import DegreeMismatch, NotConnected, ParseError
from .perm import (
    Permutation,
    compose,
    conjugate,
    cycle_type,
    format_cycles,
    inverse,
    parse_cycles,
    sign,
)


class Origami:
    """A connected square-tiled surface given by its gluing permutations."""

    __slots__ = ("h", "v")

    def __init__(self, h: Permutation, v: Permutation, check: bool = True):
        if h.degree != v.degree:
            raise DegreeMismatch(f"h has degree {h.degree} but v has degree {v.degree}")
        self.h = h
        self.v = v
        if check and not _is_transitive(h.array, v.array):
            raise NotConnected(f"<h, v> is not transitive on 1..{h.degree} for {format_origami(self)}")

    @classmethod
    def from_arrays(cls, h: tuple, v: tuple) -> "Origami":
        """Trusted constructor from 0-based image tuples (no validation)."""
        o = cls.__new__(cls)
        o.h = Permutation._from_array(h)
        o.v = Permutation._from_array(v)
        return o

    @property
    def n(self) -> int:
        return self.h.degree

    def __eq__(self, other):
        if not isinstance(other, Origami):
            return NotImplemented
        return self.h == other.h and self.v == other.v

    def __hash__(self):
        return hash((self.h, self.v))

    def __repr__(self):
        return f"Origami({format_origami(self)!r})"

    def __str__(self):
        return format_origami(self)


def make_origami(h: Permutation, v: Permutation) -> Origami:
    return Origami(h, v)


def _is_transitive(h: tuple, v: tuple) -> bool:
    n = len(h)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y in (h[x], v[x]):
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


# -- invariants ---------------------------------------------------------------

@dataclass(frozen=True)
class StratumSignature:
    zero_orders: tuple

    @property
    def genus(self) -> int:
        if not self.zero_orders:
            return 1
        return (sum(self.zero_orders) + 2) // 2

    def is_h2(self) -> bool:
        return self.zero_orders == (2,)

    def __str__(self):
        return "H(" + ",".join(map(str, self.zero_orders)) + ")"


def commutator(o: Origami) -> Permutation:
    """``[h, v] = h v h^-1 v^-1``."""
    h, v = o.h, o.v
    return compose(h, compose(v, compose(inverse(h), inverse(v))))


def stratum(o: Origami) -> StratumSignature:
    ct = cycle_type(commutator(o))
    orders = sorted((length - 1 for length in ct.elements()), reverse=True)
    return StratumSignature(tuple(orders))


def is_h2(o: Origami) -> bool:
    return _commutator_is_3cycle(o.h.array, o.v.array)


def _commutator_is_3cycle(h: tuple, v: tuple) -> bool:
    # [h,v](x) = h(v(h^-1(v^-1(x)))); test that exactly three points move, in one cycle
    n = len(h)
    hi = [0] * n
    vi = [0] * n
    for i in range(n):
        hi[h[i]] = i
        vi[v[i]] = i
    c = [h[v[hi[vi[x]]]] for x in range(n)]
    moved = [x for x in range(n) if c[x] != x]
    if len(moved) != 3:
        return False
    a = moved[0]
    return c[c[c[a]]] == a and c[a] != a and c[c[a]] != a


def minimal_block(gens, a: int, b: int) -> list:
    """Smallest block containing points ``a`` and ``b`` (0-based) for the
    group generated by ``gens`` (0-based image tuples).  Returns a union-find
    parent list describing the whole block system."""
    n = len(gens[0])
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = []
    ra, rb = find(a), find(b)
    if ra != rb:
        parent[rb] = ra
        queue.append((a, b))
    while queue:
        x, y = queue.pop()
        for g in gens:
            rx, ry = find(g[x]), find(g[y])
            if rx != ry:
                parent[ry] = rx
                queue.append((g[x], g[y]))
    return [find(x) for x in range(n)]


def is_primitive(o: Origami) -> bool:
    """No nontrivial block system for <h, v> (assumes transitivity)."""
    return _is_primitive_arrays(o.h.array, o.v.array)


def _is_primitive_arrays(h: tuple, v: tuple) -> bool:
    n = len(h)
    if n <= 2:
        return True
    gens = (h, v)
    for p in range(1, n):
        roots = minimal_block(gens, 0, p)
        r0 = roots[0]
        if any(r != r0 for r in roots):
            return False
    return True


class MonodromyLabel(str, enum.Enum):
    SYMMETRIC_FULL = "SymmetricFull"
    ALTERNATING_CONTAINED = "AlternatingContained"
    OTHER = "Other"


@dataclass(frozen=True)
class MonodromyClass:
    """Monodromy label together with the evidence it was derived from.

    ``jordan_certified`` is set when the group is primitive and contains the
    3-cycle ``[h, v]``; by Jordan's theorem it then contains Alt(n), so the
    label is exact rather than heuristic.
    """

    label: MonodromyLabel
    is_transitive: bool
    is_primitive: bool
    h_even: bool
    v_even: bool
    jordan_certified: bool


def monodromy_class(o: Origami) -> MonodromyClass:
    h, v = o.h, o.v
    transitive = _is_transitive(h.array, v.array)
    primitive = transitive and _is_primitive_arrays(h.array, v.array)
    h_even = sign(h) == 1
    v_even = sign(v) == 1
    jordan = primitive and _commutator_is_3cycle(h.array, v.array)
    if h_even and v_even:
        label = MonodromyLabel.ALTERNATING_CONTAINED
    elif jordan:
        # contains Alt(n) and an odd element
        label = MonodromyLabel.SYMMETRIC_FULL
    else:
        label = MonodromyLabel.OTHER
    return MonodromyClass(label, transitive, primitive, h_even, v_even, jordan)


def conjugate_origami(o: Origami, g: Permutation) -> Origami:
    return Origami(conjugate(o.h, g), conjugate(o.v, g), check=False)


def hyperelliptic_image(o: Origami) -> Origami:
    return Origami(inverse(o.h), inverse(o.v), check=False)


# -- canonical form -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalOrigami:
    """Conjugation-invariant key: relabeled h images then v images (1-based)."""

    encoding: tuple
    n: int

    def to_origami(self) -> Origami:
        n = self.n
        enc = self.encoding
        return Origami.from_arrays(
            tuple(x - 1 for x in enc[:n]), tuple(x - 1 for x in enc[n:])
        )

    def serialize(self) -> str:
        return ",".join(map(str, self.encoding))

    @classmethod
    def parse(cls, text: str) -> "CanonicalOrigami":
        enc = tuple(int(t) for t in text.split(","))
        if len(enc) % 2:
            raise ParseError(f"encoding has odd length {len(enc)}")
        return cls(enc, len(enc) // 2)


def canonical_encoding(h: tuple, v: tuple) -> tuple:
    """Lexicographically least BFS relabeling over all start squares.

    Takes and returns 0-based tuples; the result holds relabeled h images
    followed by relabeled v images.  Requires <h, v> transitive.
    """
    n = len(h)
    hi = [0] * n
    vi = [0] * n
    for i in range(n):
        hi[h[i]] = i
        vi[v[i]] = i
    best = None
    rng = range(n)
    for s in rng:
        lab = [-1] * n
        lab[s] = 0
        order = [s]
        k = 1
        i = 0
        while i < k:
            x = order[i]
            i += 1
            y = h[x]
            if lab[y] < 0:
                lab[y] = k
                order.append(y)
                k += 1
            y = v[x]
            if lab[y] < 0:
                lab[y] = k
                order.append(y)
                k += 1
            y = hi[x]
            if lab[y] < 0:
                lab[y] = k
                order.append(y)
                k += 1
            y = vi[x]
            if lab[y] < 0:
                lab[y] = k
                order.append(y)
                k += 1
        enc = [lab[h[x]] for x in order]
        enc.extend([lab[v[x]] for x in order])
        if best is None or enc < best:
            best = enc
    return tuple(best)


def canonical_form(o: Origami) -> CanonicalOrigami:
    enc = canonical_encoding(o.h.array, o.v.array)
    return CanonicalOrigami(tuple(x + 1 for x in enc), o.n)


def equivalent(a: Origami, b: Origami) -> bool:
    """``a`` and ``b`` differ by a simultaneous conjugation."""
    return a.n == b.n and canonical_encoding(a.h.array, a.v.array) == canonical_encoding(
        b.h.array, b.v.array
    )


# -- textual literal ----------------------------------------------------------

def format_origami(o: Origami) -> str:
    return f"h={format_cycles(o.h)}; v={format_cycles(o.v)}; n={o.n}"


_FIELD = re.compile(r"\s*([hvn])\s*=\s*([^;]*?)\s*(?:;|$)")


def parse_origami(text: str) -> Origami:
    """Parse ``"h=<cycles>; v=<cycles>; n=<int>"`` (fields in any order)."""
    fields = {}
    starts = {}
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _FIELD.match(stripped, pos)
        if not m or m.end() == pos:
            raise ParseError("expected 'h=', 'v=' or 'n=' field", text, pos + 1)
        key = m.group(1)
        if key in fields:
            raise ParseError(f"duplicate field {key!r}", text, m.start(1) + 1)
        fields[key] = m.group(2)
        starts[key] = m.start(2)
        pos = m.end()
    missing = [k for k in "hvn" if k not in fields]
    if missing:
        raise ParseError(f"missing field(s) {', '.join(missing)} in origami literal", text)
    try:
        n = int(fields["n"])
    except ValueError:
        raise ParseError(f"n must be an integer, got {fields['n']!r}", text, starts["n"] + 1) from None
    if n < 1:
        raise ParseError("n must be positive", text, starts["n"] + 1)
    perms = {}
    for key in "hv":
        try:
            perms[key] = parse_cycles(fields[key], n)
        except ParseError as exc:
            col = None if exc.column is None else starts[key] + exc.column
            raise type(exc)(str(exc).split(" (column")[0] + f" in field {key}", text, col) from None
    return Origami(perms["h"], perms["v"])


def origami_from_cycles(h: str, v: str, n: int) -> Origami:
    return Origami(parse_cycles(h, n), parse_cycles(v, n))
