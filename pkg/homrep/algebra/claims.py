# claims.py
#
# Numerical checks of the structural facts the reconstruction relies on,
# evaluated on a tower around a base label set S with two extra labels
# u = |S|+1 and v = |S|+2. Every check reports its largest residual so a
# failing tolerance can be told apart from a broken identity.

import logging
from itertools import product

import numpy as np

from homrep.algebra.quantum import QuantumGraph
from homrep.graphs.enumeration import iter_level
from homrep.graphs.labeled import glue
from homrep.models.models import ClaimResult
from homrep.utilities.errors import ContractViolation

logger = logging.getLogger(__name__)


def _relative(a, b):
    return abs(a - b) / max(1.0, abs(a), abs(b))


class ClaimContext:
    def __init__(self, tower, labels=()):
        self.tower = tower
        self.tol = tower.tolerances.idempotent_tol
        self.S = sorted(labels)
        self.u = len(self.S) + 1
        self.v = len(self.S) + 2
        self.T = self.S + [self.u]
        self.U = self.S + [self.v]
        self.W = self.S + [self.u, self.v]

    def algebra(self, labels):
        return self.tower.algebra(labels)

    def idempotents(self, labels):
        return self.tower.idempotents(labels)

    def lift(self, coords, source, target):
        return self.tower.embed(coords, self.algebra(source), self.algebra(target))


def _result(name, residual, tol, detail=""):
    return ClaimResult(name=name, passed=bool(residual <= tol), max_residual=float(residual), detail=detail)


def positive_mass(ctx):
    worst = 0.0
    for labels in (ctx.S, ctx.T, ctx.W):
        worst = max(worst, -float(np.min(ctx.idempotents(labels).masses)))
    return _result("positive_mass", max(worst, 0.0), 0.0, "f(p) > 0 for every basic idempotent")


def unit_decomposition(ctx):
    """Basic idempotents are orthogonal and sum to the unit."""
    worst = 0.0
    for labels in (ctx.S, ctx.T, ctx.W):
        a = ctx.algebra(labels)
        basis = ctx.idempotents(labels).coords
        unit = a.unit()
        worst = max(worst, a.norm(basis.sum(axis=0) - unit) / max(a.norm(unit), 1e-300))
        for i, j in product(range(len(basis)), repeat=2):
            if i < j:
                worst = max(worst, a.norm(a.multiply(basis[i], basis[j])) / max(a.norm(basis[i]), 1e-300))
    return _result("unit_decomposition", worst, ctx.tol)


def resolution_sum(ctx):
    """Each p over S equals the sum of the idempotents over S+u resolving it."""
    a_t = ctx.algebra(ctx.T)
    resolution = ctx.tower.resolution(ctx.S, ctx.T)
    q_basis = ctx.idempotents(ctx.T).coords
    worst = 0.0
    for i, p in enumerate(ctx.idempotents(ctx.S).coords):
        lifted = ctx.lift(p, ctx.S, ctx.T)
        children = resolution.children(i)
        total = q_basis[children].sum(axis=0) if children else np.zeros(a_t.dim)
        worst = max(worst, a_t.norm(lifted - total) / max(a_t.norm(lifted), 1e-300))
    return _result("resolution_sum", worst, ctx.tol)


def resolution_partition(ctx):
    """Each q over S+u resolves exactly one p over S, and f(pq)/f(q) is 0 or 1."""
    resolution = ctx.tower.resolution(ctx.S, ctx.T)
    orphans = sum(1 for found in resolution.parents if len(found) != 1)
    worst = float(np.abs(resolution.ratios - np.round(resolution.ratios)).max()) if resolution.ratios.size else 0.0
    passed = orphans == 0 and worst <= ctx.tol
    return ClaimResult(name="resolution_partition", passed=passed, max_residual=worst,
                       detail=f"{orphans} idempotents without a unique parent")


def transitivity(ctx):
    """r over W resolving q over S+u resolving p over S implies r resolves p."""
    lower = ctx.tower.resolution(ctx.S, ctx.T)
    upper = ctx.tower.resolution(ctx.T, ctx.W)
    direct = ctx.tower.resolution(ctx.S, ctx.W)
    broken = 0
    for r, found in enumerate(upper.parents):
        if len(found) == 1 and lower.parent(found[0]) is not None:
            broken += direct.parents[r] != (lower.parent(found[0]),)
    return ClaimResult(name="transitivity", passed=broken == 0, max_residual=float(broken))


def unlabel(ctx):
    """f(xy) = f(pi_S(x) y) for x over S+u and y over S+v."""
    f = ctx.tower.f
    worst = 0.0
    a_t, a_u = ctx.algebra(ctx.T), ctx.algebra(ctx.U)
    for x in a_t.basis[:6]:
        x_q = QuantumGraph.of(x)
        for y in a_u.basis[:6]:
            left = f(glue(x, y))
            right = sum(f(glue(g, y)) for g, _ in x_q.restrict(ctx.S).graphs())
            worst = max(worst, _relative(float(left), float(right)))
    return _result("unlabel", worst, 0.0)


def projection(ctx):
    """pi_S(q) = f(q)/f(p) * p when q resolves p."""
    a_s, a_t = ctx.algebra(ctx.S), ctx.algebra(ctx.T)
    p_basis, q_basis = ctx.idempotents(ctx.S), ctx.idempotents(ctx.T)
    resolution = ctx.tower.resolution(ctx.S, ctx.T)
    worst = 0.0
    for q_index, q in enumerate(q_basis.coords):
        parent = resolution.parent(q_index)
        if parent is None:
            continue
        projected = a_s.coordinates(a_t.to_quantum(q).restrict(ctx.S))
        expected = q_basis.masses[q_index] / p_basis.masses[parent] * p_basis.coords[parent]
        worst = max(worst, a_s.norm(projected - expected) / max(a_s.norm(expected), 1e-300))
    return _result("projection", worst, ctx.tol)


def _extension_pairs(ctx):
    """For each p over S: lifted p in A_W and the idempotents over S+u and S+v resolving it, in A_W."""
    a_t, a_w = ctx.algebra(ctx.T), ctx.algebra(ctx.W)
    q_basis = ctx.idempotents(ctx.T)
    resolution = ctx.tower.resolution(ctx.S, ctx.T)
    swap = {ctx.u: ctx.v}
    for i, p in enumerate(ctx.idempotents(ctx.S).coords):
        p_w = ctx.lift(p, ctx.S, ctx.W)
        children = resolution.children(i)
        q_u = [a_t.to_quantum(q_basis.coords[j]) for j in children]
        yield (i, p_w,
               [a_w.coordinates(q) for q in q_u],
               [a_w.coordinates(q.relabel(swap)) for q in q_u],
               [q_basis.masses[j] for j in children])


def resolution_ratio(ctx):
    """f(p) f(qr) = f(q) f(pr) for q resolving p over S+u and any r over S+v."""
    a_w = ctx.algebra(ctx.W)
    a_u = ctx.algebra(ctx.U)
    masses_s = ctx.idempotents(ctx.S).masses
    others = [a_w.coordinates(a_u.to_quantum(r)) for r in ctx.idempotents(ctx.U).coords]
    worst = 0.0
    for i, p_w, q_u, _, q_masses in _extension_pairs(ctx):
        for q, mass_q in zip(q_u, q_masses):
            for r in others:
                left = masses_s[i] * a_w.value(a_w.multiply(q, r))
                right = mass_q * a_w.value(a_w.multiply(p_w, r))
                worst = max(worst, _relative(left, right))
    return _result("resolution_ratio", worst, ctx.tol)


def resolution_product(ctx):
    """q resolving p over S+u and r resolving p over S+v never multiply to zero."""
    a_w = ctx.algebra(ctx.W)
    smallest = np.inf
    for _, _, q_u, q_v, _ in _extension_pairs(ctx):
        for q, r in product(q_u, q_v):
            smallest = min(smallest, a_w.norm(a_w.multiply(q, r)))
    smallest = float(smallest) if np.isfinite(smallest) else 0.0
    return ClaimResult(name="resolution_product", passed=smallest > ctx.tol,
                       max_residual=max(0.0, ctx.tol - smallest), detail=f"smallest norm {smallest:.3g}")


def product_decomposition(ctx):
    """Each r over S+v resolving p is the sum of q r over the q over S+u resolving p."""
    a_w = ctx.algebra(ctx.W)
    worst = 0.0
    for _, _, q_u, q_v, _ in _extension_pairs(ctx):
        for r in q_v:
            total = sum((a_w.multiply(q, r) for q in q_u), np.zeros(a_w.dim))
            worst = max(worst, a_w.norm(total - r) / max(a_w.norm(r), 1e-300))
    return _result("product_decomposition", worst, ctx.tol)


def mass_factorization(ctx):
    """f(q r) = f(q) f(r) / f(p) for q, r resolving p over S+u and S+v."""
    a_w = ctx.algebra(ctx.W)
    masses_s = ctx.idempotents(ctx.S).masses
    worst = 0.0
    for i, _, q_u, q_v, q_masses in _extension_pairs(ctx):
        for (q, mq), (r, mr) in product(zip(q_u, q_masses), zip(q_v, q_masses)):
            worst = max(worst, _relative(a_w.value(a_w.multiply(q, r)), mq * mr / masses_s[i]))
    return _result("mass_factorization", worst, ctx.tol)


def degree_monotone(ctx):
    """deg(q) >= deg(p) whenever q resolves p."""
    lower = ctx.tower.degrees(ctx.S)
    upper = ctx.tower.degrees(ctx.T)
    resolution = ctx.tower.resolution(ctx.S, ctx.T)
    drops = 0
    for q_index, found in enumerate(resolution.parents):
        if len(found) == 1 and upper[q_index] < lower[found[0]]:
            drops += 1
    return ClaimResult(name="degree_monotone", passed=drops == 0, max_residual=float(drops),
                       detail=f"degrees {lower} -> {upper}")


def kernel_ideal(ctx, samples=5):
    """
    For graphs g outside the basis, g minus its projection lies in the
    kernel; multiplying it by any basis element must stay in the kernel.
    """
    f = ctx.tower.f
    a = ctx.algebra(ctx.T)
    known = set(a.basis)
    extras = []
    for n in range(len(ctx.T), len(ctx.T) + 3):
        for _, graphs in iter_level(ctx.T, n, len(ctx.T) + 2, multi=f.multi_sensitive):
            extras += [g for g in graphs if g not in known]
        if len(extras) >= samples:
            break
    extras = extras[:samples]
    structure = a.structure()
    worst = 0.0
    for g in extras:
        c = a.coordinates(QuantumGraph.of(g))
        for j, b in enumerate(a.basis):
            for k, y in enumerate(a.basis):
                left = float(f(glue(glue(g, b), y)))
                right = float(c @ structure[:, j, k])
                worst = max(worst, _relative(left, right))
    return _result("kernel_ideal", worst, ctx.tol, f"{len(extras)} graphs outside the basis")


CLAIMS = (
    positive_mass, unit_decomposition, resolution_sum, resolution_partition, transitivity, unlabel,
    projection, resolution_ratio, resolution_product, product_decomposition, mass_factorization,
    degree_monotone, kernel_ideal,
)


def claim_names():
    return [claim.__name__ for claim in CLAIMS]


def run_claims(tower, labels=(), names=None):
    """Evaluate every check (or the named ones) around the label set `labels`."""
    unknown = sorted(set(names or ()) - set(claim_names()))
    if unknown:
        raise ContractViolation(f"unknown claims {unknown}; known claims: {', '.join(claim_names())}")
    ctx = ClaimContext(tower, labels)
    results = []
    for claim in CLAIMS:
        if names and claim.__name__ not in names:
            continue
        result = claim(ctx)
        log = logger.info if result.passed else logger.warning
        log(f"{result.name}: {'ok' if result.passed else 'FAILED'} (max residual {result.max_residual:.3g})")
        results.append(result)
    return results
