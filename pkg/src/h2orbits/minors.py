"""Explicit K_{3,3} subdivisions in the T/S orbit graphs.

Three families of six branch origamis O1..O6 with path words joining
{O1, O2, O3} to {O4, O5, O6}:

* ``even``: n >= 4 even, in G_n
* ``A``:    n >= 5 odd, in the A-orbit
* ``B``:    n >= 7 odd, in the B-orbit

:func:`verify_family` enumerates the orbit, walks every path word, checks
the result is a K_{3,3} subdivision, and cross-checks the intermediate
origamis and T-orbit lengths that the construction relies on.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import EndpointMismatch, InvalidFamilyDegree, ValidationFailed, VertexNotInOrbit
from .graph.certificate import MinorCertificate, verify_k33_certificate
from .graph.multigraph import MultiGraph
from .orbit import OrbitGraph, enumerate_orbit, standard_seed, t_orbit_length
from .origami import (
    Origami,
    equivalent,
    format_origami,
    monodromy_class,
    stratum,
)
from .perm import cycle_type, from_cycles
from .sl2 import Generator, apply_word, word_trace

T, Ti, S, Si = Generator.T, Generator.Tinv, Generator.S, Generator.Sinv

FAMILIES = ("even", "A", "B")
PAIRS = [(i, j) for i in (1, 2, 3) for j in (4, 5, 6)]
_ORBIT_OF = {"even": "unique", "A": "A", "B": "B"}


def normalize_family(family: str) -> str:
    key = family.strip()
    if key.lower() == "even":
        return "even"
    if key.upper() in ("A", "B"):
        return key.upper()
    raise InvalidFamilyDegree(f"unknown family {family!r}; expected even, A or B")


def _o(n: int, h, v) -> Origami:
    """Origami from cycle lists; each argument is a list of cycles."""
    return Origami(from_cycles(h, n), from_cycles(v, n))


def _rng(a, b, step=1):
    """Inclusive integer range a..b (descending when step < 0)."""
    return list(range(a, b + (1 if step > 0 else -1), step))


@dataclass
class MinorFamily:
    family: str
    n: int
    branch: dict  # 1..6 -> Origami
    words: dict  # (i, j) -> word


def check_family_degree(family: str, n: int) -> str:
    family = normalize_family(family)
    if family == "even" and (n < 4 or n % 2):
        raise InvalidFamilyDegree(f"the even family needs even n >= 4, got {n}")
    if family == "A" and (n < 5 or n % 2 == 0):
        raise InvalidFamilyDegree(f"the A family needs odd n >= 5, got {n}")
    if family == "B" and (n < 7 or n % 2 == 0):
        raise InvalidFamilyDegree(f"the B family needs odd n >= 7, got {n}")
    return family


def build_family(family: str, n: int) -> MinorFamily:
    family = check_family_degree(family, n)
    full = _rng(1, n)
    if family in ("even", "A"):
        if family == "even":
            v2 = [[1] + _rng(n - 1, 3, -2) + _rng(n, 2, -2)]
        else:
            v2 = [[1] + _rng(n - 1, 2, -2), _rng(n, 3, -2)]
        branch = {
            1: _o(n, [[n - 1, n]], [_rng(1, n - 1)]),
            2: _o(n, [full], v2),
            3: _o(n, [full], [[n - 1, n]]),
            4: _o(n, [full], [_rng(2, n)]),
            5: _o(n, [full], [[2] + _rng(n, 3, -1)]),
            6: _o(n, [_rng(2, n)], [[1, 2] + _rng(n, 3, -1)]),
        }
        words = {
            (1, 4): (Si,),
            (1, 5): (S,),
            (1, 6): (S, T),
            (2, 4): (T,) * (n - 3),
            (2, 5): (Ti,),
            (2, 6): (Ti,) * (n - 4) + (Si,),
            (3, 4): (Ti,),
            (3, 5): (T,),
            (3, 6): (T, S),
        }
    else:
        tail = [n - 2, n - 1, n]
        branch = {
            1: _o(n, [tail], [_rng(1, n - 2)]),
            2: _o(n, [tail], [full]),
            3: _o(n, [_rng(3, n)], [[1, 2, 3]]),
            4: _o(n, [tail], [_rng(1, n - 2) + [n, n - 1]]),
            5: _o(n, [_rng(3, n)], [full]),
            6: _o(n, [_rng(3, n)], [[1, 2, 3] + _rng(n, 4, -1)]),
        }
        words = {
            (1, 4): (T,),
            (1, 5): (S, Ti, S, S),
            (1, 6): (Si, T, Si, Si),
            (2, 4): (Ti,),
            (2, 5): (T, Si) + (Ti,) * (n - 3) + (Si,),
            (2, 6): (S,),
            (3, 4): (Si, T, S),
            (3, 5): (Ti,),
            (3, 6): (T,),
        }
    fam = MinorFamily(family, n, branch, words)
    _validate_branch(fam)
    return fam


def _validate_branch(fam: MinorFamily) -> None:
    for k, o in fam.branch.items():
        where = f"O_{k} = {format_origami(o)} ({fam.family}, n={fam.n})"
        if not stratum(o).is_h2():
            raise ValidationFailed(f"{where}: not in H(2), stratum {stratum(o)}")
        mc = monodromy_class(o)
        if not mc.is_primitive:
            raise ValidationFailed(f"{where}: not primitive")
        both_even = mc.h_even and mc.v_even
        if fam.family == "B" and not both_even:
            raise ValidationFailed(f"{where}: B family origami with an odd generator")
        if fam.family != "B" and both_even:
            raise ValidationFailed(f"{where}: {fam.family} family origami with both generators even")


def expand_paths(fam: MinorFamily, orbit: OrbitGraph) -> MinorCertificate:
    """Walk each path word from O_i, recording orbit vertex indices."""
    idx = {}
    for k, o in fam.branch.items():
        i = orbit.index_of(o)
        if i is None:
            raise VertexNotInOrbit(f"O_{k} = {format_origami(o)} is not a vertex of the orbit")
        idx[k] = i
    paths = {}
    for (i, j), word in fam.words.items():
        trace = word_trace(word, fam.branch[i])
        verts = []
        for o in trace:
            x = orbit.index_of(o)
            if x is None:
                raise VertexNotInOrbit(f"path {i}{j} leaves the orbit at {format_origami(o)}")
            verts.append(x)
        if verts[-1] != idx[j]:
            raise EndpointMismatch(
                f"path {i}{j} ends at {format_origami(trace[-1])}, which is not equivalent to O_{j}"
            )
        paths[(i - 1, j - 4)] = verts
    return MinorCertificate((idx[1], idx[2], idx[3]), (idx[4], idx[5], idx[6]), paths)


# -- claims about intermediate origamis ----------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    # "claim" checks gate verification; "cross-check" ones compare against
    # printed formulas whose typesetting is ambiguous and are only reported
    kind: str = "claim"


def _eq_check(name, actual: Origami, expected: Origami, kind="claim", literal=False) -> Check:
    if literal:
        ok = actual == expected
    else:
        ok = equivalent(actual, expected)
    rel = "=" if literal else "~"
    detail = f"{format_origami(actual)} {rel if ok else 'vs'} {format_origami(expected)}"
    return Check(name, ok, detail, kind)


def _len_check(name, o: Origami, expected: int) -> Check:
    got = t_orbit_length(o)
    return Check(name, got == expected, f"T-orbit length {got}, expected {expected}")


def _power(letter, k):
    return (letter,) * k


def family_claims(fam: MinorFamily) -> list:
    """Intermediate-vertex and T-orbit claims used in the construction."""
    n = fam.n
    O = fam.branch
    full = _rng(1, n)
    checks = []
    if fam.family in ("even", "A"):
        o_prime = _o(n, [[n - 1, n]], [full])
        checks.append(_eq_check("T(O_1) = O' (literal)", apply_word((T,), O[1]), o_prime, literal=True))
        checks.append(_eq_check("path 16 interior is O'", apply_word((T,), O[1]), o_prime))
        o_dprime = _o(n, [_rng(1, n - 1)], [[n - 1, n]])
        checks.append(_eq_check("S(O_3) = O''", apply_word((S,), O[3]), o_dprime))
        checks.append(_eq_check("O'' ~ ((2..n),(1,2))", o_dprime, _o(n, [_rng(2, n)], [[1, 2]])))
        for k, target in ((1, 3), (2, 5), (3, 2)):
            checks.append(_eq_check(f"T^{k}(O_4) = O_{target}", apply_word(_power(T, k), O[4]), O[target]))
        checks.append(_len_check("T-orbit of O_4 has length n", O[4], n))
        checks.append(_len_check("T-orbit of O_6 has length n-1", O[6], n - 1))
        s_o2 = apply_word((Si,), O[2])
        if fam.family == "even":
            literal = Origami(from_cycles([[1] + _rng(n, 3, -1)], n), O[2].v)
            checks.append(_eq_check("S^-1(O_2) = ((1,n,...,3), v_2) (literal)", s_o2, literal, literal=True))
            printed = _o(n, [_rng(2, n)], [[1, 2] + _rng(4, n, 2) + _rng(3, n - 1, 2)])
            checks.append(_eq_check("S^-1(O_2) ~ ((2..n),(1,2,4,...,n,3,5,...,n-1))", s_o2, printed))
        else:
            printed = _o(n, [_rng(2, n)], [[1, 2] + _rng(4, n - 1, 2), _rng(3, n, 2)])
            checks.append(_eq_check("S^-1(O_2) ~ ((2..n),(1,2,4,...,n-1)(3,5,...,n))", s_o2, printed))
        if n == 4:
            checks.append(_eq_check("S^-1(O_2) = O_6 for n = 4", s_o2, O[6]))
        else:
            checks.append(_eq_check("T^-1(O_6) = O''", apply_word((Ti,), O[6]), o_dprime))
            checks.append(_eq_check("T^2 S^-1(O_2) = O''", apply_word((T, T), s_o2), o_dprime))
            checks.append(
                _eq_check("T^-(n-4) S^-1(O_2) = O_6", apply_word(_power(Ti, n - 4), s_o2), O[6])
            )
        # h keeps its conjugacy class along the T-orbit through path 24
        trace = word_trace(fam.words[(2, 4)], O[2])
        types = {tuple(sorted(cycle_type(o.h).elements())) for o in trace}
        checks.append(Check("cycle type of h constant along path 24", len(types) == 1, f"types {sorted(types)}"))
    else:
        m = (n - 3) // 2
        k = (n - 1) // 2
        checks.append(_eq_check("S(O_1) = O'", apply_word((S,), O[1]), _o(n, [full], [[3] + _rng(n, 4, -1)])))
        o2 = [3]
        for x in _rng(n, 4 + m, -1):
            o2 += [x - m, x]
        checks.append(_eq_check("S^2(O_1) = O''", apply_word((S, S), O[1]), _o(n, [full], [o2]), "cross-check"))
        o3 = [1]
        for x in _rng(2, n - k):
            o3 += [x, x + k]
        checks.append(
            _eq_check("T^-1 S^2(O_1) = O'''", apply_word((Ti, S, S), O[1]), _o(n, [full], [o3]), "cross-check")
        )
        checks.append(
            _eq_check("S^-1(O_1) = O^IV", apply_word((Si,), O[1]), _o(n, [full], [_rng(3, n)]))
        )
        o5 = [3]
        for x in _rng(4, n - m):
            o5 += [x + m, x]
        checks.append(
            _eq_check("S^-2(O_1) = O^V", apply_word((Si, Si), O[1]), _o(n, [full], [o5]), "cross-check")
        )
        o6 = [1, k + 2]
        for x in _rng(n, k + 3, -1):
            o6 += [x, x - k]
        o6 += [2]
        checks.append(
            _eq_check("T S^-2(O_1) = O^VI", apply_word((T, Si, Si), O[1]), _o(n, [full], [o6]), "cross-check")
        )
        checks.append(
            _eq_check("S(O_3) = O^VII", apply_word((S,), O[3]), _o(n, [full], [[n - 2, n, n - 1]]))
        )
        checks.append(
            _eq_check(
                "T S(O_3) = O^VIII",
                apply_word((T, S), O[3]),
                _o(n, [full], [[1, n - 1, n] + _rng(n - 2, 2, -1)]),
            )
        )
        s_o2 = apply_word((Si,), O[2])
        checks.append(
            _eq_check(
                "S^-1(O_2) = ((1..n),(1,...,n-3,n-1,n-2,n))",
                s_o2,
                _o(n, [full], [_rng(1, n - 3) + [n - 1, n - 2, n]]),
            )
        )
        t_o5 = apply_word((Ti,), O[5])
        checks.append(
            _eq_check(
                "T^-1(O_5) = ((3..n),(1,2,3,5,...,n,4,6,...,n-1))",
                t_o5,
                _o(n, [_rng(3, n)], [[1, 2, 3] + _rng(5, n, 2) + _rng(4, n - 1, 2)]),
            )
        )
        st_o5 = apply_word((S, Ti), O[5])
        checks.append(
            _eq_check(
                "S T^-1(O_5) = ((1..n),(1,n-1,n-3,...,4,n,n-2,...,3,2))",
                st_o5,
                _o(n, [full], [[1] + _rng(n - 1, 4, -2) + _rng(n, 3, -2) + [2]]),
            )
        )
        o_prime = apply_word((S,), O[1])
        checks.append(_eq_check("T^-1 S T^-1(O_5) = O'", apply_word((Ti, S, Ti), O[5]), o_prime))
        checks.append(_eq_check("T^2 S^-1(O_2) = O'", apply_word((T, T), s_o2), o_prime))
        checks.append(_len_check("T-orbit of S^-1(O_2) has length n", s_o2, n))
        checks.append(
            _eq_check("T^-(n-3) S^-1(O_2) = S T^-1(O_5)", apply_word(_power(Ti, n - 3), s_o2), st_o5)
        )
    return checks


# -- end-to-end verification -------------------------------------------------

@dataclass
class VerificationReport:
    family: str
    n: int
    certificate: MinorCertificate | None
    certificate_ok: bool
    certificate_diagnostic: str
    checks: list
    orbit: OrbitGraph | None
    timings: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.certificate_ok and all(c.passed for c in self.checks if c.kind == "claim")

    @property
    def discrepancies(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "family": self.family,
            "n": self.n,
            "branch_vertices": [],
            "paths": {},
            "verified": self.verified,
            "orbit_vertex_count": self.orbit.vertex_count if self.orbit else None,
            "checks": [
                {"name": c.name, "kind": c.kind, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }
        if self.certificate is not None and self.orbit is not None:
            cert = self.certificate
            out["branch_vertices"] = [
                self.orbit.vertices[x].serialize() for x in list(cert.left) + list(cert.right)
            ]
            out["paths"] = {f"{i + 1}{j + 4}": list(p) for (i, j), p in sorted(cert.paths.items())}
        if not self.certificate_ok:
            out["diagnostic"] = self.certificate_diagnostic
        if timings:
            out["timings_ms"] = {k: round(v * 1000, 3) for k, v in self.timings.items()}
        return out


def verify_family(family: str, n: int, orbit: OrbitGraph | None = None) -> VerificationReport:
    """Enumerate the orbit (unless given) and machine-check the construction."""
    family = check_family_degree(family, n)
    timings = {}
    t0 = time.perf_counter()
    fam = build_family(family, n)
    timings["build"] = time.perf_counter() - t0
    if orbit is None:
        t0 = time.perf_counter()
        orbit = enumerate_orbit(standard_seed(n, _ORBIT_OF[family]), "TS", _ORBIT_OF[family])
        timings["orbit"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    cert = expand_paths(fam, orbit)
    verdict = verify_k33_certificate(MultiGraph.from_orbit(orbit), cert)
    timings["certificate"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    checks = family_claims(fam)
    for (i, j), word in fam.words.items():
        path = cert.paths[(i - 1, j - 4)]
        checks.append(
            Check(f"path {i}{j} has {len(word)} edges", len(path) == len(word) + 1, f"{len(path) - 1} edges")
        )
    timings["claims"] = time.perf_counter() - t0
    return VerificationReport(family, n, cert, verdict.ok, verdict.diagnostic, checks, orbit, timings)
