# tower.py
#
# Algebras and idempotent bases over nested label sets for one oracle. Only
# the label sets {1..s} are built; any other set of the same size is a
# relabeled copy.

import logging
from dataclasses import dataclass

import numpy as np

from homrep.algebra.algebra_rep import build_algebra
from homrep.algebra.idempotents import idempotent_basis, resolves
from homrep.config import get_settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Resolution:
    """For each q in P_T, the indices p in P_S it resolves, plus the ratios f(pq)/f(q)."""

    parents: tuple
    ratios: np.ndarray

    def parent(self, q_index):
        found = self.parents[q_index]
        return found[0] if len(found) == 1 else None

    def children(self, p_index):
        return [q for q, found in enumerate(self.parents) if found == (p_index,)]


class AlgebraTower:
    def __init__(self, f, budget=None, tolerances=None, seed=0, engine=None):
        settings = get_settings()
        self.f = f
        self.budget = budget or settings.algebra_budget
        self.tolerances = tolerances or settings.tolerances
        self.seed = seed
        self.engine = engine
        self._algebras = {}
        self._relabeled = {}
        self._idempotents = {}

    def _canonical_size(self, labels):
        labels = sorted(set(labels))
        mapping = {i + 1: label for i, label in enumerate(labels)}
        return len(labels), mapping

    def algebra(self, labels):
        s, mapping = self._canonical_size(labels)
        if s not in self._algebras:
            self._algebras[s] = build_algebra(self.f, range(1, s + 1), self.budget, self.tolerances, self.engine)
        base = self._algebras[s]
        if all(k == v for k, v in mapping.items()):
            return base
        key = tuple(sorted(mapping.values()))
        if key not in self._relabeled:
            base.structure()
            self._relabeled[key] = base.relabel(mapping)
        return self._relabeled[key]

    def built(self):
        """Algebras built so far, keyed by label count."""
        return dict(sorted(self._algebras.items()))

    def idempotents(self, labels):
        s, _ = self._canonical_size(labels)
        if s not in self._idempotents:
            self._idempotents[s] = idempotent_basis(self.algebra(range(1, s + 1)), seed=self.seed + s)
        return self._idempotents[s].relabel(self.algebra(labels))

    def embed(self, coords, source, target):
        """Coordinates in `target` of an element given by coordinates in `source`."""
        if source.labels == target.labels:
            return np.asarray(coords)
        return target.coordinates(source.to_quantum(coords))

    def resolution(self, labels_s, labels_t):
        a_s, a_t = self.algebra(labels_s), self.algebra(labels_t)
        p_basis = self.idempotents(labels_s)
        q_basis = self.idempotents(labels_t)
        embedded = [self.embed(p, a_s, a_t) for p in p_basis.coords]
        ratios = np.array([[a_t.inner(p, q) / a_t.inner(q, q) for p in embedded] for q in q_basis.coords])
        parents = tuple(tuple(i for i, p in enumerate(embedded) if resolves(a_t, q, p)) for q in q_basis.coords)
        return Resolution(parents, ratios)

    def degrees(self, labels, extra=None):
        """Degree of every p in P_S: how many idempotents over S + {extra} resolve it."""
        labels = sorted(set(labels))
        extra = extra if extra is not None else (max(labels) + 1 if labels else 1)
        resolution = self.resolution(labels, labels + [extra])
        return [len(resolution.children(i)) for i in range(len(self.idempotents(labels)))]


def degree(tower, p_index, labels, extra=None):
    return tower.degrees(labels, extra)[p_index]
