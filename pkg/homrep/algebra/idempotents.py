# idempotents.py

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from homrep.utilities.errors import DegenerateSpectrumError

logger = logging.getLogger(__name__)

MAX_RETRIES = 10


@dataclass(frozen=True, eq=False)
class IdempotentBasis:
    """Basic idempotents p_1..p_r as coordinate rows over `algebra.basis`, with masses f(p_i)."""

    algebra: object
    coords: np.ndarray
    masses: np.ndarray

    def __len__(self):
        return len(self.coords)

    def elements(self):
        return [self.algebra.to_quantum(p) for p in self.coords]

    def relabel(self, algebra):
        return IdempotentBasis(algebra, self.coords, self.masses)


def _is_simple(eigenvalues, tol):
    if len(eigenvalues) < 2:
        return True
    scale = max(1.0, float(np.abs(eigenvalues).max()))
    return float(np.diff(np.sort(eigenvalues)).min()) > tol * scale


def idempotent_basis(a, seed=0, tol=None):
    """
    Eigenvectors of the multiplication operator of a random element, taken
    orthonormal in the Gram inner product, are multiples of the basic
    idempotents; the multiple for v is <v, u>.
    """
    tol = a.tolerances.idempotent_tol if tol is None else tol
    rng = np.random.default_rng(seed)
    unit = a.unit()
    for attempt in range(MAX_RETRIES):
        x = rng.standard_normal(a.dim)
        eigenvalues, vectors = scipy.linalg.eigh(a.multiplication_matrix(x), a.gram)
        if not _is_simple(eigenvalues, tol):
            logger.debug(f"repeated eigenvalue on attempt {attempt + 1} over {sorted(a.labels)}; retrying")
            continue
        coords = np.array([(v @ a.gram @ unit) * v for v in vectors.T])
        masses = coords @ a.gram @ unit
        residual = max(a.norm(a.multiply(p, p) - p) / max(a.norm(p), 1e-300) for p in coords)
        if residual > tol:
            logger.debug(f"idempotent residual {residual:.3g} on attempt {attempt + 1}; retrying")
            continue
        order = sorted(range(len(coords)), key=lambda i: tuple(np.round(coords[i], 8)))
        return IdempotentBasis(a, coords[order], masses[order])
    raise DegenerateSpectrumError(
        f"no simple spectrum after {MAX_RETRIES} random elements over {sorted(a.labels)} "
        f"(dim {a.dim}); check idempotent_tol or the saturation of the algebra"
    )


def resolves(a_t, q, p_coords):
    """q (coordinates in a_t) resolves p (coordinates in a_t) when pq = q."""
    pq = a_t.multiply(p_coords, q)
    return a_t.norm(pq - q) <= a_t.tolerances.idempotent_tol * max(a_t.norm(q), 1e-300)
