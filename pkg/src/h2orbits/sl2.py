"""SL(2,Z) acting on origamis through the shears T and S.

    T(h, v) = (h, v h^-1)        S(h, v) = (h v^-1, v)

Words are sequences of letters read like function composition: the
rightmost letter acts first, so ``(S, T)`` means ``S o T``.  With this
convention ``matrix_of`` is a homomorphism for the action, i.e. words with
equal matrices send an origami to equivalent origamis.
"""

from __future__ import annotations

import enum
import os
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import ParseError, ValidationFailed
from .origami import (
    Origami,
    _is_primitive_arrays,
    _is_transitive,
    format_origami,
    stratum,
)
from .perm import sign

_debug_checks = os.environ.get("H2ORBITS_DEBUG", "") not in ("", "0")


def set_debug_checks(enabled: bool) -> None:
    """Revalidate invariants after every generator application."""
    global _debug_checks
    _debug_checks = bool(enabled)


def debug_checks_enabled() -> bool:
    return _debug_checks


class Generator(str, enum.Enum):
    T = "T"
    Tinv = "T^-1"
    S = "S"
    Sinv = "S^-1"

    @property
    def inverse(self) -> "Generator":
        return _INVERSE[self]

    def __str__(self):
        return self.value


_INVERSE = {
    Generator.T: Generator.Tinv,
    Generator.Tinv: Generator.T,
    Generator.S: Generator.Sinv,
    Generator.Sinv: Generator.S,
}

GroupWord = tuple  # of Generator, leftmost letter acts last


# -- action on raw arrays -----------------------------------------------------

def _inv(p: tuple) -> list:
    q = [0] * len(p)
    for i, x in enumerate(p):
        q[x] = i
    return q


def _act(letter: Generator, h: tuple, v: tuple):
    if letter is Generator.T:
        hi = _inv(h)
        return h, tuple([v[x] for x in hi])
    if letter is Generator.Tinv:
        return h, tuple([v[x] for x in h])
    if letter is Generator.S:
        vi = _inv(v)
        return tuple([h[x] for x in vi]), v
    if letter is Generator.Sinv:
        return tuple([h[x] for x in v]), v
    raise ValueError(f"unknown generator {letter!r}")


def act_arrays(word: Sequence[Generator], h: tuple, v: tuple):
    """Apply ``word`` to a 0-based pair, rightmost letter first."""
    for letter in reversed(word):
        h, v = _act(letter, h, v)
    return h, v


def _both_even(o: Origami) -> bool:
    return sign(o.h) == 1 and sign(o.v) == 1


def _check_invariants(before: Origami, after: Origami, letter) -> None:
    problems = []
    if after.n != before.n:
        problems.append("number of squares")
    if not _is_transitive(after.h.array, after.v.array):
        problems.append("connectedness")
    if stratum(after) != stratum(before):
        problems.append("stratum")
    if _is_primitive_arrays(after.h.array, after.v.array) != _is_primitive_arrays(
        before.h.array, before.v.array
    ):
        problems.append("primitivity")
    # individual parities move under T and S; "both even" (monodromy inside Alt(n)) does not
    if _both_even(after) != _both_even(before):
        problems.append("generator parity")
    if problems:
        raise ValidationFailed(
            f"applying {letter} to {format_origami(before)} changed: {', '.join(problems)}"
        )


def apply_generator(letter: Generator, o: Origami) -> Origami:
    h, v = _act(Generator(letter), o.h.array, o.v.array)
    out = Origami.from_arrays(h, v)
    if _debug_checks:
        _check_invariants(o, out, letter)
    return out


def apply_T(o: Origami) -> Origami:
    return apply_generator(Generator.T, o)


def apply_Tinv(o: Origami) -> Origami:
    return apply_generator(Generator.Tinv, o)


def apply_S(o: Origami) -> Origami:
    return apply_generator(Generator.S, o)


def apply_Sinv(o: Origami) -> Origami:
    return apply_generator(Generator.Sinv, o)


def apply_word(word: Sequence[Generator], o: Origami) -> Origami:
    for letter in reversed(word):
        o = apply_generator(letter, o)
    return o


def word_trace(word: Sequence[Generator], o: Origami) -> list:
    """Origamis visited while applying ``word``, starting with ``o``."""
    out = [o]
    for letter in reversed(word):
        o = apply_generator(letter, o)
        out.append(o)
    return out


# -- words --------------------------------------------------------------------

def invert_word(word: Sequence[Generator]) -> GroupWord:
    return tuple(letter.inverse for letter in reversed(word))


def word_power(word: Sequence[Generator], k: int) -> GroupWord:
    if k < 0:
        return tuple(invert_word(word)) * (-k)
    return tuple(word) * k


def word_P() -> GroupWord:
    # [[1,1],[0,1]] [[1,0],[-1,1]] = [[0,1],[-1,1]]
    return (Generator.T, Generator.Sinv)


def word_R() -> GroupWord:
    # [[1,-1],[0,1]] [[1,0],[1,1]] [[1,-1],[0,1]] = [[0,-1],[1,0]]
    return (Generator.Tinv, Generator.S, Generator.Tinv)


_NAMED = {
    "T": (Generator.T,),
    "S": (Generator.S,),
    "P": word_P(),
    "R": word_R(),
}

_TOKEN = re.compile(r"([TSPR])(?:\^([+-]?\d+))?$")


def parse_word(text: str) -> GroupWord:
    """Parse whitespace-separated tokens like ``"T^-3 S T"`` or ``"R^-1 P"``."""
    word = []
    col = 0
    for m in re.finditer(r"\S+", text):
        col = m.start() + 1
        tm = _TOKEN.match(m.group(0))
        if not tm:
            raise ParseError(f"bad word token {m.group(0)!r}", text, col)
        k = int(tm.group(2)) if tm.group(2) is not None else 1
        word.extend(word_power(_NAMED[tm.group(1)], k))
    return tuple(word)


def format_word(word: Sequence[Generator]) -> str:
    if not word:
        return ""
    out = []
    for letter in word:
        base, e = (letter.value[0], -1 if letter.value.endswith("^-1") else 1)
        if out and out[-1][0] == base and (out[-1][1] > 0) == (e > 0):
            out[-1][1] += e
        else:
            out.append([base, e])
    return " ".join(b if e == 1 else f"{b}^{e}" for b, e in out)


# -- matrices -----------------------------------------------------------------

@dataclass(frozen=True)
class IntMatrix2:
    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, other: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, k: int) -> "IntMatrix2":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = IDENTITY
        for _ in range(k):
            out = out @ self
        return out

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]


IDENTITY = IntMatrix2(1, 0, 0, 1)
MATRIX = {
    Generator.T: IntMatrix2(1, 1, 0, 1),
    Generator.Tinv: IntMatrix2(1, -1, 0, 1),
    Generator.S: IntMatrix2(1, 0, 1, 1),
    Generator.Sinv: IntMatrix2(1, 0, -1, 1),
}
P_MATRIX = IntMatrix2(0, 1, -1, 1)
R_MATRIX = IntMatrix2(0, -1, 1, 0)


def matrix_of(word: Sequence[Generator]) -> IntMatrix2:
    m = IDENTITY
    for letter in word:
        m = m @ MATRIX[letter]
    return m


# label -> word, for the two generating pairs used to build orbit graphs
GENERATOR_SETS = {
    "TS": {"T": (Generator.T,), "S": (Generator.S,)},
    "PR": {"P": word_P(), "R": word_R()},
}
