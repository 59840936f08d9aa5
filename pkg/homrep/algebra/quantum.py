# quantum.py

from dataclasses import dataclass
from fractions import Fraction

from homrep.graphs.canonical import canonical
from homrep.graphs.labeled import glue, relabel, restrict_labels
from homrep.utilities.errors import ContractViolation


@dataclass(frozen=True)
class QuantumGraph:
    """
    A finite real combination of graphs that all carry the label set `labels`.
    Terms are (canonical code, coefficient) pairs sorted by code, with no
    zero coefficients.
    """

    labels: frozenset
    terms: tuple = ()

    @classmethod
    def from_terms(cls, pairs, labels=None):
        collected = {}
        for g, coefficient in pairs:
            if labels is None:
                labels = g.label_set
            elif g.label_set != frozenset(labels):
                raise ContractViolation(
                    f"term labeled {sorted(g.label_set)} in a quantum graph over {sorted(labels)}"
                )
            code = canonical(g)
            collected[code] = collected.get(code, 0.0) + float(coefficient)
        if labels is None:
            raise ContractViolation("an empty quantum graph needs an explicit label set")
        terms = tuple(sorted((code, c) for code, c in collected.items() if c != 0.0))
        return cls(frozenset(labels), terms)

    @classmethod
    def of(cls, g, coefficient=1.0):
        return cls.from_terms([(g, coefficient)])

    @classmethod
    def zero(cls, labels):
        return cls(frozenset(labels), ())

    def graphs(self):
        return [(code.graph(), c) for code, c in self.terms]

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        if self.labels != other.labels:
            raise ContractViolation(f"cannot add quantum graphs over {sorted(self.labels)} and {sorted(other.labels)}")
        return QuantumGraph.from_terms(self.graphs() + other.graphs(), self.labels)

    def __neg__(self):
        return self * -1.0

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return QuantumGraph.from_terms([(g, c * scalar) for g, c in self.graphs()], self.labels)

    __rmul__ = __mul__

    def glue(self, other):
        """Bilinear extension of the gluing product."""
        pairs = [(glue(a, b), ca * cb) for a, ca in self.graphs() for b, cb in other.graphs()]
        return QuantumGraph.from_terms(pairs, self.labels | other.labels)

    def restrict(self, labels):
        """Drop every label outside `labels` from every term."""
        labels = frozenset(labels)
        if not labels <= self.labels:
            raise ContractViolation(f"cannot restrict labels {sorted(self.labels)} to {sorted(labels)}")
        return QuantumGraph.from_terms([(restrict_labels(g, labels), c) for g, c in self.graphs()], labels)

    def relabel(self, mapping):
        renamed = frozenset(mapping.get(label, label) for label in self.labels)
        return QuantumGraph.from_terms([(relabel(g, mapping), c) for g, c in self.graphs()], renamed)


def evaluate(f, x):
    """f extended linearly, evaluated exactly per term."""
    total = sum((Fraction(c) * f(g) for g, c in x.graphs()), Fraction(0))
    return float(total)


def inner(f, x, y):
    """<x, y> = f(xy), expanded over term pairs without canonicalizing the products."""
    total = Fraction(0)
    for a, ca in x.graphs():
        for b, cb in y.graphs():
            total += Fraction(ca) * Fraction(cb) * f(glue(a, b))
    return float(total)


def project(x, labels):
    return x.restrict(labels)
