"""Second-eigenvalue probe for regular multigraphs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sps
import scipy.sparse.linalg as spla

from ..errors import NotConnected
from .multigraph import MultiGraph

TOL = 1e-9
_DENSE_BELOW = 4


@dataclass(frozen=True)
class SpectralProbe:
    degree: int
    lambda_2: float  # second-largest adjacency eigenvalue, by value
    lambda_min: float
    gap: float  # 1 - lambda_2 / degree, clamped to [0, 1]
    method: str

    def metadata(self) -> dict:
        return {
            "degree": self.degree,
            "lambda_2": self.lambda_2,
            "lambda_min": self.lambda_min,
            "gap": self.gap,
            "ordering": "second-largest by value",
            "method": self.method,
        }


def adjacency_matrix(g: MultiGraph) -> sps.csr_matrix:
    """Symmetric adjacency with edge multiplicities; a loop adds 2 on the diagonal."""
    rows, cols = [], []
    for a, b in g.edges:
        rows += [a, b]
        cols += [b, a]
    data = np.ones(len(rows))
    n = g.num_vertices
    return sps.csr_matrix((data, (rows, cols)), shape=(n, n))


def spectral_probe(g: MultiGraph) -> SpectralProbe:
    if not g.is_connected():
        raise NotConnected("spectral gap needs a connected graph")
    deg = g.degrees()
    d = deg[0]
    if any(x != d for x in deg):
        raise ValueError("spectral probe expects a regular graph")
    A = adjacency_matrix(g)
    n = g.num_vertices
    if n < _DENSE_BELOW:
        ev = np.linalg.eigvalsh(A.toarray())
        lam2 = float(ev[-2]) if n > 1 else float(d)
        lam_min = float(ev[0])
        method = "dense"
    else:
        lam2, lam_min = _iterative(A, d)
        method = "lanczos"
    gap = min(1.0, max(0.0, 1.0 - lam2 / d)) if d else 0.0
    return SpectralProbe(d, lam2, lam_min, gap, method)


def _iterative(A, d):
    n = A.shape[0]
    ones = np.full(n, 1.0 / np.sqrt(n))

    # the top eigenvector of a connected regular graph is constant; push its
    # eigenvalue from d down to -2d, below the rest of the spectrum
    def matvec(x):
        x = np.asarray(x).ravel()
        return A @ x - 3 * d * ones * (ones @ x)

    op = spla.LinearOperator((n, n), matvec=matvec, dtype=float)
    v0 = np.cos(np.arange(n) + 0.5)
    top = spla.eigsh(op, k=1, which="LA", tol=TOL * 1e-3, v0=v0, return_eigenvectors=False)
    bottom = spla.eigsh(A, k=1, which="SA", tol=TOL * 1e-3, v0=v0, return_eigenvectors=False)
    return float(top[0]), float(bottom[0])


def spectral_gap(g: MultiGraph) -> float:
    """``1 - lambda_2 / d`` for a connected d-regular multigraph."""
    return spectral_probe(g).gap
