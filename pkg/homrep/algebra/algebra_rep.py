# algebra_rep.py
#
# A finite model of the algebra of S-labeled quantum graphs modulo the
# kernel of <x, y> = f(xy). The basis is a set of S-labeled graphs whose
# exact Gram matrix is positive definite; coordinates of any quantum graph
# over a subset of S come from solving against that Gram matrix, which
# discards kernel components. Products use the tensor of triple values
# f(b_i b_j b_k).

import logging
from fractions import Fraction
from math import lcm

import numpy as np
import scipy.linalg

from homrep.algebra.quantum import QuantumGraph
from homrep.config import get_settings
from homrep.connmat.exact import PsdVerdict, quadratic_form
from homrep.engine.evaluation_engine import get_engine
from homrep.graphs.canonical import canonical
from homrep.graphs.enumeration import iter_level
from homrep.graphs.labeled import glue, relabel, unit_graph
from homrep.models.models import AlgebraDump
from homrep.utilities.errors import ContractViolation, NotReflectionPositiveError

logger = logging.getLogger(__name__)


class AlgebraRep:
    def __init__(self, labels, basis, gram_exact, oracle, saturated, levels, tolerances=None, engine=None,
                 triples=None):
        self.labels = frozenset(labels)
        self.basis = tuple(basis)
        self.gram_exact = tuple(tuple(row) for row in gram_exact)
        self.oracle = oracle
        self.saturated = saturated
        self.levels = tuple(levels)
        self.tolerances = tolerances or get_settings().tolerances
        self.engine = engine
        self.gram = np.array([[float(v) for v in row] for row in self.gram_exact], dtype=float)
        self._cho = scipy.linalg.cho_factor(self.gram) if self.dim else None
        self._triples = triples

    @property
    def dim(self):
        return len(self.basis)

    def basis_quantum(self):
        return [QuantumGraph.of(b) for b in self.basis]

    def structure(self):
        """T[i, j, k] = f(b_i b_j b_k), symmetric in all three indices."""
        if self._triples is None:
            r = self.dim
            index = [(i, j, k) for i in range(r) for j in range(i, r) for k in range(j, r)]
            basis = self.basis
            values = get_engine(self.engine).map(
                lambda ijk: self.oracle(glue(glue(basis[ijk[0]], basis[ijk[1]]), basis[ijk[2]])),
                index, desc=f"triples over {sorted(self.labels)}",
            )
            tensor = np.zeros((r, r, r))
            for (i, j, k), value in zip(index, values):
                for a, b, c in {(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)}:
                    tensor[a, b, c] = float(value)
            self._triples = tensor
        return self._triples

    def solve(self, v):
        return scipy.linalg.cho_solve(self._cho, np.asarray(v, dtype=float))

    def coordinates(self, x):
        """Coordinates of a quantum graph whose labels lie within this algebra's labels."""
        if not x.labels <= self.labels:
            raise ContractViolation(f"quantum graph over {sorted(x.labels)} does not embed in {sorted(self.labels)}")
        terms = x.graphs()
        v = []
        for b in self.basis:
            total = Fraction(0)
            for g, c in terms:
                total += Fraction(c) * self.oracle(glue(g, b))
            v.append(float(total))
        return self.solve(v)

    def unit(self):
        return self.coordinates(QuantumGraph.of(unit_graph(self.labels)))

    def multiplication_matrix(self, x):
        """Symmetric matrix of y, z -> <x y, z>."""
        tx = np.einsum("i,ijk->jk", np.asarray(x, dtype=float), self.structure())
        return (tx + tx.T) / 2

    def multiply(self, x, y):
        return self.solve(self.multiplication_matrix(x) @ np.asarray(y, dtype=float))

    def inner(self, x, y):
        return float(np.asarray(x) @ self.gram @ np.asarray(y))

    def norm(self, x):
        return float(np.sqrt(max(self.inner(x, x), 0.0)))

    def value(self, x):
        """f(x) = <x, u> for coordinates x."""
        return self.inner(x, self.unit())

    def to_quantum(self, coords):
        return QuantumGraph.from_terms(list(zip(self.basis, (float(c) for c in coords))), self.labels)

    def relabel(self, mapping):
        """The same algebra over renamed labels; no oracle calls."""
        return AlgebraRep(
            labels={mapping.get(label, label) for label in self.labels},
            basis=[relabel(b, mapping) for b in self.basis],
            gram_exact=self.gram_exact,
            oracle=self.oracle,
            saturated=self.saturated,
            levels=self.levels,
            tolerances=self.tolerances,
            engine=self.engine,
            triples=self._triples,
        )

    def dump(self, idempotents=None):
        return AlgebraDump(
            labels=sorted(self.labels),
            basis=[canonical(b).text for b in self.basis],
            levels=list(self.levels),
            gram=self.gram.tolist(),
            dim=self.dim,
            saturated=self.saturated,
            idempotents=[] if idempotents is None else idempotents.coords.tolist(),
            masses=[] if idempotents is None else [float(m) for m in idempotents.masses],
        )


class _ExactGramBuilder:
    """Grows a basis greedily, keeping the exact inverse of the Gram matrix."""

    def __init__(self, oracle, eps, engine, k=0):
        self.oracle = oracle
        self.k = k
        self.eps = eps
        self.engine = engine
        self.basis = []
        self.gram = []
        self.inverse = []

    def offer(self, g):
        values = get_engine(self.engine).map(lambda b: self.oracle(glue(g, b)), self.basis + [g])
        v, self_value = values[:-1], values[-1]
        w = [sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in self.inverse]
        residual = self_value - sum((v[i] * w[i] for i in range(len(v))), Fraction(0))
        scale = max([self_value] + [self.gram[i][i] for i in range(len(self.gram))])
        threshold = Fraction(self.eps) * max(scale, Fraction(0))
        if residual < -threshold:
            raise NotReflectionPositiveError(
                f"negative Schur complement {float(residual):.3g} while adding {canonical(g)}; "
                f"{self.oracle.name} is not reflection positive",
                k=self.k, rows=[canonical(b).text for b in self.basis + [g]],
                verdict=self._witness(v, w, self_value),
            )
        if residual <= threshold:
            return False
        r = len(self.basis)
        inverse = [[self.inverse[i][j] + w[i] * w[j] / residual for j in range(r)] + [-w[i] / residual]
                   for i in range(r)]
        inverse.append([-w[j] / residual for j in range(r)] + [1 / residual])
        self.inverse = inverse
        for i in range(r):
            self.gram[i].append(v[i])
        self.gram.append(list(v) + [self_value])
        self.basis.append(g)
        return True

    def _witness(self, v, w, self_value):
        """x = (-w, 1) over basis + [g]: x^T G x equals the Schur complement."""
        gram = [row + [v[i]] for i, row in enumerate(self.gram)] + [list(v) + [self_value]]
        x = [-c for c in w] + [Fraction(1)]
        scale = lcm(*(c.denominator for c in x))
        x = tuple(c * scale for c in x)
        return PsdVerdict("not_psd", x, quadratic_form(gram, x))


def build_algebra(f, labels, budget=None, tolerances=None, engine=None):
    """
    Enumerate S-labeled graphs by (nodes, edges, code) and keep those that
    raise the rank of the Gram matrix. Levels |S| .. |S| + min_levels - 1 are
    always scanned; after that the first level adding nothing marks the
    algebra saturated. Running out of levels leaves it unsaturated.
    """
    settings = get_settings()
    budget = budget or settings.algebra_budget
    tolerances = tolerances or settings.tolerances
    labels = sorted(set(labels))
    s = len(labels)
    builder = _ExactGramBuilder(f, tolerances.rank_eps, engine, k=s)
    levels = []
    saturated = False
    for n in range(s, s + budget.extra_nodes + 1):
        added = 0
        for _, graphs in iter_level(labels, n, s + budget.extra_edges, multi=f.multi_sensitive):
            for g in graphs:
                added += builder.offer(g)
        levels.append(added)
        if n >= s + budget.min_levels and added == 0:
            saturated = True
            break
    if not saturated:
        logger.warning(f"algebra of {f.name} over {labels} did not saturate within {budget.extra_nodes} "
                       f"extra nodes (level sizes {levels})")
    logger.info(f"algebra of {f.name} over {labels}: dim {len(builder.basis)}, levels {levels}")
    return AlgebraRep(labels, builder.basis, builder.gram, f, saturated, levels, tolerances, engine)
