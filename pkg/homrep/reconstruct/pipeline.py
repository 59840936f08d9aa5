# pipeline.py
#
# From an evaluation oracle to a weighted target: check multiplicativity and
# reflection positivity on small slices, normalize so that a single node
# has value 1, find a label set whose idempotents reach the maximum degree,
# read node weights off idempotent masses and edge weights off the single
# edge graph, then snap to short rationals and verify on held-out graphs.

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np

from homrep.algebra.quantum import QuantumGraph
from homrep.algebra.tower import AlgebraTower
from homrep.config import get_settings
from homrep.connmat.exact import quadratic_form
from homrep.connmat.slices import build_slice, multiplicativity_check, slice_from_rows
from homrep.graphs.canonical import decode
from homrep.graphs.labeled import single_edge_graph
from homrep.graphs.multigraph import MultiGraph, random_multigraph
from homrep.hom.elimination import hom_fast
from homrep.models.models import LevelSummary, ReconstructionReport, WeightedTarget
from homrep.parameters.catalog import derived_parameter
from homrep.services.loggers.process_logger import ProcessLogger
from homrep.utilities.errors import (
    DegenerateIdempotentError,
    DegenerateSpectrumError,
    NonNormalizableError,
    NotMultiplicativeError,
    NotReflectionPositiveError,
)
from homrep.utilities.utils import format_rational, pbar

logger = logging.getLogger(__name__)


def normalize(f):
    """f'(G) = f(G) / f(K_1)**|V(G)|, returned with the scale f(K_1)."""
    empty = f(MultiGraph(0))
    if empty != 1:
        raise NonNormalizableError(f"{f.name}(K_0) = {format_rational(empty)}, expected 1")
    scale = f(MultiGraph(1))
    if scale <= 0:
        raise NonNormalizableError(f"{f.name}(K_1) = {format_rational(scale)} is not positive")
    if scale == 1:
        return f, scale
    return derived_parameter(f, f"{f.name}/norm", lambda g: f(g) / scale ** g.node_count), scale


@dataclass
class DegreeSite:
    labels: tuple
    p_index: int
    D: int
    degrees: list
    flags: list = field(default_factory=list)


def find_max_degree_site(tower, max_levels=None):
    """
    Walk S = {}, {1}, {1,2}, ... computing the degree of every basic
    idempotent; stop at the first level whose maximum degree equals the
    previous one and return the argmax there.
    """
    max_levels = max_levels or tower.budget.max_levels
    degrees = []
    flags = []
    site_level = None
    for k in range(max_levels):
        degrees.append(tower.degrees(list(range(1, k + 1))))
        logger.info(f"degrees at |S|={k}: {degrees[-1]}")
        if k >= 1 and max(degrees[k]) == max(degrees[k - 1]):
            site_level = k - 1
            break
    if site_level is None:
        flags.append("unstabilized-degree")
        best = max(max(d) for d in degrees)
        site_level = next(k for k, d in enumerate(degrees) if max(d) == best)
        logger.warning(f"maximum degree still growing after {max_levels} levels: "
                       f"{[max(d) for d in degrees]}; using |S|={site_level}")
    level = degrees[site_level]
    p_index = level.index(max(level))
    return DegreeSite(tuple(range(1, site_level + 1)), p_index, max(level), degrees, flags)


def degree_bound(dims):
    """Smallest q with q**k >= dim(A_k) for every observed k >= 1."""
    bound = 1
    for k, dim in dims.items():
        if k < 1:
            continue
        q = 1
        while q ** k < dim:
            q += 1
        bound = max(bound, q)
    return bound


@dataclass
class RawTarget:
    alpha: list
    beta: list
    asymmetry: float
    span_residual: float


def build_target(tower, site):
    """Node weights f(q_i)/f(p); edge weights f(p k_uv q_i q_j) / f(q_i q_j)."""
    labels = list(site.labels)
    k = len(labels)
    u, v = k + 1, k + 2
    tol = tower.tolerances.idempotent_tol
    a_s = tower.algebra(labels)
    a_u = tower.algebra(labels + [u])
    a_w = tower.algebra(labels + [u, v])
    p_basis = tower.idempotents(labels)
    q_basis = tower.idempotents(labels + [u])
    children = tower.resolution(labels, labels + [u]).children(site.p_index)
    if len(children) != site.D:
        raise DegenerateIdempotentError(f"found {len(children)} idempotents resolving p, expected {site.D}")

    mass_p = float(p_basis.masses[site.p_index])
    alpha = [float(q_basis.masses[i]) / mass_p for i in children]

    q_u = [a_u.to_quantum(q_basis.coords[i]) for i in children]
    q_v = [q.relabel({u: v}) for q in q_u]
    cu = [a_w.coordinates(q) for q in q_u]
    cv = [a_w.coordinates(q) for q in q_v]
    p_w = a_w.coordinates(a_s.to_quantum(p_basis.coords[site.p_index]))
    edge = a_w.coordinates(QuantumGraph.of(single_edge_graph(labels, u, v)))
    pk = a_w.multiply(p_w, edge)

    d = site.D
    beta = np.zeros((d, d))
    spanned = np.zeros(a_w.dim)
    products = [[a_w.multiply(cu[i], cv[j]) for j in range(d)] for i in range(d)]
    for i in range(d):
        for j in range(d):
            qq = products[i][j]
            mass = a_w.inner(qq, qq)
            if mass <= tol * mass_p:
                raise DegenerateIdempotentError(f"product of idempotents {i},{j} has mass {mass:.3g}")
            beta[i, j] = a_w.inner(pk, qq) / mass
            spanned += beta[i, j] * qq
    asymmetry = float(np.abs(beta - beta.T).max()) if d else 0.0
    beta = (beta + beta.T) / 2
    span_residual = a_w.norm(pk - spanned) / max(a_w.norm(pk), 1e-300)
    return RawTarget(alpha, beta.tolist(), asymmetry, span_residual)


def snap(value, tolerances):
    candidate = Fraction(value).limit_denominator(tolerances.snap_max_denominator)
    if abs(float(candidate) - value) <= tolerances.snap_tol:
        return candidate, True
    return Fraction(value).limit_denominator(10 ** 12), False


@dataclass
class VerifyResult:
    residuals: list
    exact: bool
    success: bool


def verify(f, h, graphs, tol, verbose=False):
    """Relative error |f(G) - hom(G, h)| / max(1, |f(G)|) per graph."""
    residuals = []
    exact = True
    for g in pbar(graphs, desc="verify", verbose=verbose):
        expected = f(g)
        difference = abs(expected - hom_fast(g, h))
        exact = exact and difference == 0
        residuals.append(float(difference / max(Fraction(1), abs(expected))))
    return VerifyResult(residuals, exact, all(r < tol for r in residuals))


def heldout_graphs(seed, count, max_nodes, max_edges=None):
    rng = np.random.default_rng([seed, 1])
    max_edges = 2 * max_nodes if max_edges is None else max_edges
    return [random_multigraph(rng, max_nodes, max_edges, multi=True) for _ in range(count)]


def _certificate(error, f, scale=1, engine=None):
    """
    Rows, witness and value of a not-PSD verdict in terms of f itself. A
    verdict found on the normalized parameter is mapped back by dividing each
    coordinate by scale**nodes and re-evaluating the form on f.
    """
    if error.verdict is None:
        return None
    pairs = [(code, Fraction(x)) for code, x in zip(error.rows, error.verdict.witness) if x]
    codes = [code for code, _ in pairs]
    witness = [x for _, x in pairs]
    value = error.verdict.value
    if scale != 1:
        rows = [decode(code) for code in codes]
        witness = [x / Fraction(scale) ** g.node_count for g, x in zip(rows, witness)]
        common = lcm(*(x.denominator for x in witness))
        witness = [x * common for x in witness]
        value = quadratic_form(slice_from_rows(f, rows, error.k, engine).entries, witness)
    return {
        "k": error.k,
        "rows": codes,
        "witness": [format_rational(x) for x in witness],
        "value": format_rational(value),
    }


def reconstruct(f, settings=None, seed=None, test_graphs=None, engine=None, verbose=False):
    settings = settings or get_settings()
    seed = settings.seed if seed is None else seed
    tolerances = settings.tolerances
    plog = ProcessLogger(verbose=verbose)
    report = ReconstructionReport(status="failed", parameter=f.name, seed=seed)
    flags = []
    try:
        plog.start("multiplicativity")
        check = multiplicativity_check(f, budget=settings.slice_budget, engine=engine)
        plog.end("multiplicativity", rank=check.rank, value=format_rational(check.value_at_empty))
        if not check.multiplicative:
            raise NotMultiplicativeError(f"{f.name} fails the k=0 multiplicativity test "
                                         f"(f(K_0)={format_rational(check.value_at_empty)}, rank {check.rank})",
                                         report=check)

        plog.start("reflection_positivity")
        for k in range(settings.psd_levels + 1):
            current = build_slice(f, k, budget=settings.slice_budget, engine=engine)
            verdict = current.psd()
            if not verdict.is_psd:
                raise NotReflectionPositiveError(f"M({f.name},{k}) is not positive semidefinite",
                                                 k=k, rows=current.codes(), verdict=verdict)
        plog.end("reflection_positivity", levels=settings.psd_levels)

        normalized, scale = normalize(f)
        report.normalization = scale

        plog.start("degree_search")
        tower = AlgebraTower(normalized, settings.algebra_budget, tolerances, seed, engine)
        site = find_max_degree_site(tower)
        flags += site.flags
        plog.end("degree_search", D=site.D, labels=list(site.labels))

        plog.start("target")
        raw = build_target(tower, site)
        plog.end("target", asymmetry=f"{raw.asymmetry:.3g}", span=f"{raw.span_residual:.3g}")

        dims = {s: a.dim for s, a in tower.built().items()}
        if not all(a.saturated for a in tower.built().values()):
            flags.append("unsaturated")
        report.levels = [
            LevelSummary(labels=list(range(1, s + 1)), dim=a.dim, saturated=a.saturated,
                         degrees=site.degrees[s] if s < len(site.degrees) else [],
                         max_degree=max(site.degrees[s]) if s < len(site.degrees) else None)
            for s, a in tower.built().items()
        ]
        report.degree_bound = degree_bound(dims)
        if site.D > report.degree_bound:
            flags.append("degree-exceeds-bound")
        if raw.asymmetry > tolerances.idempotent_tol:
            logger.warning(f"edge weights asymmetric by {raw.asymmetry:.3g} before symmetrizing")
            flags.append("asymmetric-beta")
        if raw.span_residual > tolerances.idempotent_tol:
            logger.warning(f"p k_uv is not spanned by the idempotent products (residual {raw.span_residual:.3g})")
            flags.append("edge-not-spanned")

        alpha, alpha_snapped = [], []
        for a in raw.alpha:
            value, snapped = snap(a, tolerances)
            if value <= 0:
                value, snapped = Fraction(a), False
            alpha.append(value * scale)
            alpha_snapped.append(snapped)
        beta, beta_snapped = [], []
        for row in raw.beta:
            snapped_row = [snap(b, tolerances) for b in row]
            beta.append([value for value, _ in snapped_row])
            beta_snapped.append([ok for _, ok in snapped_row])
        if not all(alpha_snapped) or not all(all(row) for row in beta_snapped):
            logger.warning("some recovered weights are not close to short rationals")
        target = WeightedTarget.build(alpha, beta)
        report.target = target
        report.S_used = list(site.labels)
        report.D = site.D
        report.alpha_snapped = alpha_snapped
        report.beta_snapped = beta_snapped

        plog.start("verify")
        graphs = test_graphs if test_graphs is not None else heldout_graphs(
            seed, settings.heldout_graphs, settings.heldout_max_nodes)
        result = verify(f, target, graphs, tolerances.verify_tol, verbose=verbose)
        plog.end("verify", graphs=len(graphs), exact=result.exact)
        report.residuals = result.residuals
        report.exact_match = result.exact
        if result.success:
            report.status = "success"
        elif "unsaturated" in flags or "unstabilized-degree" in flags:
            report.status = "unsaturated"
        else:
            report.status = "failed"
    except NotMultiplicativeError as e:
        report.status, report.message = "not_multiplicative", str(e)
    except NotReflectionPositiveError as e:
        report.status, report.message = "not_psd", str(e)
        report.certificate = _certificate(e, f, report.normalization or 1, engine)
    except NonNormalizableError as e:
        report.status, report.message = "not_normalizable", str(e)
    except (DegenerateSpectrumError, DegenerateIdempotentError) as e:
        report.status, report.message = "degenerate", str(e)
    if report.status != "success":
        logger.warning(f"reconstruction of {f.name} ended with status {report.status}: {report.message}")
    report.flags = flags
    report.timings = plog.timings()
    return report
