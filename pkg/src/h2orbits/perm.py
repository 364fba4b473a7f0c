"""Permutations of {1..n} stored as dense image tuples.

Cycle notation only appears at the I/O boundary (:func:`parse_cycles` and
:func:`format_cycles`).  Products are right-to-left function application::

    compose(p, q)(x) == p(q(x))

Internally images are 0-based; every public accessor is 1-based.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .errors import (
    DegreeMismatch,
    MalformedCycle,
    PointOutOfRange,
    RepeatedPointInCycle,
)


class Permutation:
    """An immutable bijection of {1..degree}."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Sequence[int]):
        img = tuple(int(x) - 1 for x in images)
        n = len(img)
        if n < 1:
            raise ValueError("degree must be at least 1")
        seen = [False] * n
        for x in img:
            if not 0 <= x < n or seen[x]:
                raise ValueError(f"images {list(images)} do not form a bijection of 1..{n}")
            seen[x] = True
        self._img = img
        self._hash = None

    @classmethod
    def _from_array(cls, img: tuple) -> "Permutation":
        # trusted 0-based constructor, no validation
        p = cls.__new__(cls)
        p._img = img
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be at least 1")
        return cls._from_array(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        """1-based images: ``images[i - 1] == self(i)``."""
        return tuple(x + 1 for x in self._img)

    @property
    def array(self) -> tuple:
        """0-based image tuple (hot-path access)."""
        return self._img

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self._img):
            raise PointOutOfRange(f"point {i} outside 1..{len(self._img)}")
        return self._img[i - 1] + 1

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._img)
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def cycles(self) -> list:
        """Nontrivial disjoint cycles, 1-based, each starting at its minimum."""
        return [[x + 1 for x in c] for c in _cycles0(self._img) if len(c) > 1]

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"

    def __str__(self):
        return format_cycles(self)


def _cycles0(img: Sequence[int]) -> list:
    n = len(img)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        c = []
        j = i
        while not seen[j]:
            seen[j] = True
            c.append(j)
            j = img[j]
        out.append(c)
    return out


def _check_degrees(*perms: Permutation) -> int:
    n = perms[0].degree
    for p in perms[1:]:
        if p.degree != n:
            raise DegreeMismatch(f"degrees {n} and {p.degree} differ")
    return n


def from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
    """Product of the given 1-based cycles, rightmost applied first."""
    img = list(range(degree))
    for cyc in reversed(list(cycles)):
        cyc = [int(x) - 1 for x in cyc]
        if len(cyc) != len(set(cyc)):
            raise RepeatedPointInCycle(f"repeated point in cycle {[x + 1 for x in cyc]}")
        for x in cyc:
            if not 0 <= x < degree:
                raise PointOutOfRange(f"point {x + 1} outside 1..{degree}")
        if len(cyc) < 2:
            continue
        step = {cyc[k]: cyc[(k + 1) % len(cyc)] for k in range(len(cyc))}
        # new = c o old
        img = [step.get(y, y) for y in img]
    return Permutation._from_array(tuple(img))


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``"(1,2,3)(4,5)"``.

    Cycles need not be disjoint; the product is evaluated right to left.
    Empty text or ``"()"`` is the identity.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    cycles = []
    i, n = 0, len(text)

    def skip_ws(k):
        while k < n and text[k].isspace():
            k += 1
        return k

    i = skip_ws(i)
    while i < n:
        if text[i] != "(":
            raise MalformedCycle(f"expected '(' but found {text[i]!r}", text, i + 1)
        i = skip_ws(i + 1)
        cyc = []
        positions = []
        if i < n and text[i] == ")":
            cycles.append(cyc)
            i = skip_ws(i + 1)
            continue
        while True:
            j = i
            if j < n and text[j] in "+-":
                j += 1
            while j < n and text[j].isdigit():
                j += 1
            token = text[i:j]
            if not token or not token.lstrip("+-").isdigit():
                found = repr(text[i]) if i < n else "end of input"
                raise MalformedCycle(f"expected an integer but found {found}", text, i + 1)
            point = int(token)
            if not 1 <= point <= degree:
                raise PointOutOfRange(f"point {point} outside 1..{degree}", text, i + 1)
            if point in cyc:
                raise RepeatedPointInCycle(f"point {point} repeated within one cycle", text, i + 1)
            cyc.append(point)
            positions.append(i + 1)
            i = skip_ws(j)
            if i < n and text[i] == ",":
                i = skip_ws(i + 1)
                continue
            if i < n and text[i] == ")":
                i = skip_ws(i + 1)
                break
            found = repr(text[i]) if i < n else "end of input"
            raise MalformedCycle(f"expected ',' or ')' but found {found}", text, i + 1)
        cycles.append(cyc)
    return from_cycles(cycles, degree)


def format_cycles(p: Permutation) -> str:
    """Disjoint-cycle notation; identity prints as ``"()"``."""
    cs = p.cycles()
    if not cs:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cs)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``compose(p, q)(x) == p(q(x))``."""
    _check_degrees(p, q)
    a = p._img
    return Permutation._from_array(tuple(a[x] for x in q._img))


def inverse(p: Permutation) -> Permutation:
    img = p._img
    inv = [0] * len(img)
    for i, x in enumerate(img):
        inv[x] = i
    return Permutation._from_array(tuple(inv))


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """Return ``g p g^-1``."""
    _check_degrees(p, g)
    gi, pi = g._img, p._img
    img = [0] * len(pi)
    # (g p g^-1)(g(x)) = g(p(x))
    for x in range(len(pi)):
        img[gi[x]] = gi[pi[x]]
    return Permutation._from_array(tuple(img))


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        p, k = inverse(p), -k
    result = Permutation.identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(base, result)
        base = compose(base, base)
        k >>= 1
    return result


def cycle_type(p: Permutation) -> Counter:
    """Multiset of nontrivial cycle lengths."""
    return Counter(len(c) for c in _cycles0(p._img) if len(c) > 1)


def sign(p: Permutation) -> int:
    ncyc = len(_cycles0(p._img))
    return -1 if (p.degree - ncyc) % 2 else 1
