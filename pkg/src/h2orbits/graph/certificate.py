"""K_{3,3}-subdivision certificates and their checker."""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import MultiGraph


@dataclass(frozen=True)
class MinorCertificate:
    """Six branch vertices and nine vertex paths ``paths[(i, j)]`` running from
    ``left[i]`` to ``right[j]`` for ``i, j`` in ``0..2``."""

    left: tuple
    right: tuple
    paths: dict


@dataclass(frozen=True)
class CertificateVerdict:
    ok: bool
    diagnostic: str = ""

    def __bool__(self):
        return self.ok


def verify_k33_certificate(g: MultiGraph, cert: MinorCertificate) -> CertificateVerdict:
    """Check that ``cert`` is a K_{3,3} subdivision inside ``g``.

    Loops never count as path steps; a step needs a genuine edge between two
    distinct vertices.  On failure the verdict names the first violation.
    """
    nb = g.neighbors()
    branch = list(cert.left) + list(cert.right)
    if len(branch) != 6:
        return CertificateVerdict(False, "need exactly three vertices on each side")
    for x in branch:
        if not 0 <= x < g.num_vertices:
            return CertificateVerdict(False, f"branch vertex {x} is not a vertex of the graph")
    if len(set(branch)) != 6:
        return CertificateVerdict(False, "branch vertices are not pairwise distinct")
    branch_set = set(branch)
    owner = {}
    for i in range(3):
        for j in range(3):
            path = cert.paths.get((i, j))
            name = f"path ({i},{j})"
            if not path:
                return CertificateVerdict(False, f"{name} is missing")
            if path[0] != cert.left[i] or path[-1] != cert.right[j]:
                return CertificateVerdict(
                    False, f"{name} runs {path[0]} -> {path[-1]}, expected {cert.left[i]} -> {cert.right[j]}"
                )
            if len(path) < 2:
                return CertificateVerdict(False, f"{name} has no edges")
            for a, b in zip(path, path[1:]):
                if b not in nb[a]:
                    return CertificateVerdict(False, f"{name} steps {a} -> {b} along a non-edge")
            if len(set(path)) != len(path):
                return CertificateVerdict(False, f"{name} repeats a vertex")
            for x in path[1:-1]:
                if x in branch_set:
                    return CertificateVerdict(False, f"{name} passes through branch vertex {x}")
                if x in owner:
                    return CertificateVerdict(
                        False, f"{name} shares interior vertex {x} with path {owner[x]}"
                    )
                owner[x] = (i, j)
    return CertificateVerdict(True)


def k33_certificate(left, right, paths) -> MinorCertificate:
    return MinorCertificate(tuple(left), tuple(right), {k: list(p) for k, p in paths.items()})
