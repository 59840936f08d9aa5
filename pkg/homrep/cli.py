#cli.py

import argparse
import json
import logging
import os
import sys

from homrep.utilities.errors import ContractViolation, GraphParseError, HomrepError

EXIT_OK = 0
EXIT_CONTRACT = 1
EXIT_PARSE = 2
EXIT_NOT_PSD = 3
EXIT_UNSATURATED = 4
EXIT_FAILED = 5

STATUS_EXIT = {
    "success": EXIT_OK,
    "not_psd": EXIT_NOT_PSD,
    "unsaturated": EXIT_UNSATURATED,
    "failed": EXIT_FAILED,
    "degenerate": EXIT_FAILED,
    "not_multiplicative": EXIT_CONTRACT,
    "not_normalizable": EXIT_CONTRACT,
}


class _Parser(argparse.ArgumentParser):
    """argparse exits on bad flags; raise instead so run() owns the exit code."""

    def error(self, message):
        raise GraphParseError(f"{self.prog}: {message}")


def _common():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=None, help="Seed for every random choice (default from config)")
    common.add_argument('--threads', type=int, default=None, help="Worker threads for oracle evaluation")
    common.add_argument('--format', choices=['tsv', 'json'], default='tsv', help="Output format")
    common.add_argument('--config', default=None, help="Path to a config.yaml")
    common.add_argument('--out', default=None, help="Write the main output here instead of stdout")
    common.add_argument('--verbose', action='store_true', help="Stage summaries and progress bars")
    return common


def _slice_flags(parser):
    parser.add_argument('--param', required=True, help="Registry name of the graph parameter")
    parser.add_argument('--k', type=int, default=0, help="Number of labels")
    parser.add_argument('--max-nodes', type=int, default=None)
    parser.add_argument('--max-edges', type=int, default=None)
    parser.add_argument('--max-rows', type=int, default=None)
    parser.add_argument('--multi', action='store_true', default=None, help="Allow parallel edges in rows")
    parser.add_argument('--rows', default=None, help="Comma separated row graphs (K2, P3, or canonical codes)")
    parser.add_argument('--rows-from', default=None, help="Graph file whose graphs are the rows")


def build_parser():
    common = _common()
    parser = _Parser(prog="homrep", description="Exact graph parameters, connection matrices and "
                                                "reconstruction of weighted targets")
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    hom = sub.add_parser('hom', parents=[common], help="hom(G, H) for every graph in a file")
    hom.add_argument('graphs', help="Graph file")
    hom.add_argument('target', help="Target JSON file or a named target")
    hom.add_argument('--brute', action='store_true', help="Use the brute-force sum instead of elimination")

    param = sub.add_parser('param', help="Evaluate or list graph parameters")
    param_sub = param.add_subparsers(dest='action', required=True, parser_class=_Parser)
    param_eval = param_sub.add_parser('eval', parents=[common])
    param_eval.add_argument('name')
    param_eval.add_argument('graphs')
    param_sub.add_parser('list', parents=[common])

    connmat = sub.add_parser('connmat', help="Slices of connection matrices")
    connmat_sub = connmat.add_subparsers(dest='action', required=True, parser_class=_Parser)
    for action in ('build', 'rank', 'psd'):
        _slice_flags(connmat_sub.add_parser(action, parents=[common]))
    profile = connmat_sub.add_parser('profile', parents=[common])
    profile.add_argument('--param', required=True)
    profile.add_argument('--k-max', type=int, default=3)
    profile.add_argument('--multi', action='store_true', default=None)
    profile.add_argument('--budget-nodes', type=int, default=None)
    profile.add_argument('--budget-edges', type=int, default=None)
    profile.add_argument('--max-rows', type=int, default=None)

    flows = sub.add_parser('flows', help="Flow counting and flow targets")
    flows_sub = flows.add_subparsers(dest='action', required=True, parser_class=_Parser)
    count = flows_sub.add_parser('count', parents=[common])
    count.add_argument('spec', help="Flow spec file or inline spec ('group 2,2; S 1,0 0,1 1,1')")
    count.add_argument('graphs')
    target = flows_sub.add_parser('target', parents=[common])
    target.add_argument('spec')

    rec = sub.add_parser('reconstruct', parents=[common], help="Reconstruct a weighted target from a parameter")
    rec.add_argument('--param', required=True)
    rec.add_argument('--budget-nodes', type=int, default=None, help="Extra unlabeled nodes in algebra bases")
    rec.add_argument('--budget-edges', type=int, default=None, help="Extra edges in algebra bases")
    rec.add_argument('--max-levels', type=int, default=None)
    rec.add_argument('--tol', type=float, default=None, help="Verification tolerance")
    rec.add_argument('--report', default=None, help="Write the JSON report here")
    rec.add_argument('--test-graphs', default=None, help="Graph file used instead of random held-out graphs")

    enum = sub.add_parser('enumerate', parents=[common], help="List canonical codes of labeled graphs")
    enum.add_argument('--labels', type=int, default=0)
    enum.add_argument('--max-nodes', type=int, required=True)
    enum.add_argument('--max-edges', type=int, required=True)
    enum.add_argument('--multi', action='store_true')

    claims = sub.add_parser('claims', parents=[common], help="Check algebra identities for a parameter")
    claims.add_argument('--param', required=True)
    claims.add_argument('--labels', type=int, default=0, help="Size of the base label set S")
    claims.add_argument('--only', default=None, help="Comma separated claim names")
    claims.add_argument('--budget-nodes', type=int, default=None)
    claims.add_argument('--budget-edges', type=int, default=None)
    return parser


def _settings(args):
    from homrep.config import load_settings

    overrides = {"seed": args.seed, "threads": args.threads}
    algebra = {"extra_nodes": getattr(args, 'budget_nodes', None), "extra_edges": getattr(args, 'budget_edges', None),
               "max_levels": getattr(args, 'max_levels', None)}
    algebra = {k: v for k, v in algebra.items() if v is not None}
    if algebra and args.command in ('reconstruct', 'claims'):
        overrides["algebra_budget"] = algebra
    slices = {}
    if getattr(args, 'max_rows', None) is not None:
        slices["max_rows"] = args.max_rows
    if args.command == 'connmat' and args.action == 'profile':
        slices.update({k: v for k, v in (("extra_nodes", args.budget_nodes), ("extra_edges", args.budget_edges))
                       if v is not None})
    if slices:
        overrides["slice_budget"] = slices
    if getattr(args, 'tol', None) is not None:
        overrides["tolerances"] = {"verify_tol": args.tol}
    return load_settings(args.config, **overrides)


def _emit(text, out=None):
    if out:
        with open(out, "w") as file:
            file.write(text)
    else:
        sys.stdout.write(text)


def _rows(args):
    from homrep.graphs.graph_io import parse_graph_list, read_graphs
    from homrep.graphs.labeled import label_first_nodes

    if args.rows:
        return parse_graph_list(args.rows, args.k)
    if args.rows_from:
        return [g if g.label_set else label_first_nodes(g.graph, args.k) for g in read_graphs(args.rows_from)]
    return None


def _cmd_hom(args, settings, engine):
    from homrep.graphs.graph_io import read_graphs
    from homrep.hom.elimination import hom_fast
    from homrep.hom.hom_engine import hom
    from homrep.parameters.targets import get_target
    from homrep.utilities.utils import format_rational

    h = get_target(args.target)
    graphs = read_graphs(args.graphs)
    fn = (lambda g: hom(g, h)) if args.brute else (lambda g: hom_fast(g, h, settings.elimination_max_entries))
    values = engine.map(fn, graphs, desc="hom")
    if args.format == 'json':
        _emit(json.dumps([format_rational(v) for v in values]) + "\n", args.out)
    else:
        _emit("".join(format_rational(v) + "\n" for v in values), args.out)
    return EXIT_OK


def _cmd_param(args, settings, engine):
    from homrep.graphs.graph_io import read_graphs
    from homrep.parameters.catalog import get_parameter, parameter_names
    from homrep.utilities.utils import format_rational

    if args.action == 'list':
        _emit("".join(name + "\n" for name in parameter_names()), args.out)
        return EXIT_OK
    f = get_parameter(args.name)
    values = engine.evaluate(f, read_graphs(args.graphs))
    if args.format == 'json':
        _emit(json.dumps({"parameter": f.name, "values": [format_rational(v) for v in values]}) + "\n", args.out)
    else:
        _emit("".join(format_rational(v) + "\n" for v in values), args.out)
    return EXIT_OK


def _verdict_text(verdict, fmt):
    from homrep.utilities.utils import format_rational

    if fmt == 'json':
        return json.dumps({
            "verdict": verdict.verdict,
            "witness": None if verdict.witness is None else [format_rational(x) for x in verdict.witness],
            "value": None if verdict.value is None else format_rational(verdict.value),
        }) + "\n"
    if verdict.is_psd:
        return "psd\n"
    witness = ",".join(format_rational(x) for x in verdict.witness)
    return f"not_psd\nwitness ({witness})\nvalue {format_rational(verdict.value)}\n"


def _cmd_connmat(args, settings, engine):
    from homrep.connmat.slices import build_slice, rank_profile
    from homrep.parameters.catalog import get_parameter

    f = get_parameter(args.param)
    if args.action == 'profile':
        profile = rank_profile(f, args.k_max, budget=settings.slice_budget, multi=args.multi, engine=engine)
        if args.format == 'json':
            _emit(json.dumps([vars(bound) for bound in profile]) + "\n", args.out)
        else:
            lines = ["k\trank\trows\tsaturated\ttruncated\tmax_nodes\tmax_edges"]
            lines += [f"{b.k}\t{b.rank}\t{b.rows}\t{str(b.saturated).lower()}\t{str(b.truncated).lower()}\t"
                      f"{b.max_nodes}\t{b.max_edges}" for b in profile]
            _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK

    current = build_slice(f, args.k, args.max_nodes, args.max_edges, args.multi, rows=_rows(args),
                          budget=settings.slice_budget, engine=engine)
    if args.action == 'build':
        _emit(current.to_json() + "\n" if args.format == 'json' else current.to_tsv(), args.out)
        return EXIT_OK
    if args.action == 'rank':
        rank = current.rank()
        if args.format == 'json':
            _emit(json.dumps({"k": args.k, "rows": current.size, "rank": rank}) + "\n", args.out)
        else:
            _emit(f"{rank}\n", args.out)
        return EXIT_OK
    verdict = current.psd()
    _emit(_verdict_text(verdict, args.format), args.out)
    return EXIT_OK if verdict.is_psd else EXIT_NOT_PSD


def _cmd_flows(args, settings, engine):
    from homrep.graphs.graph_io import read_graphs
    from homrep.parameters.flows import count_flows, flow_target, parse_flow_spec, read_flow_spec

    spec = read_flow_spec(args.spec) if os.path.exists(args.spec) else parse_flow_spec(args.spec)
    if args.action == 'count':
        counts = engine.map(lambda g: count_flows(g.graph, spec), read_graphs(args.graphs), desc="flows")
        if args.format == 'json':
            _emit(json.dumps([int(c) for c in counts]) + "\n", args.out)
        else:
            _emit("".join(f"{int(c)}\n" for c in counts), args.out)
        return EXIT_OK
    target = flow_target(spec, tol=settings.tolerances.flow_round_tol)
    _emit(target.to_json() + "\n", args.out)
    return EXIT_OK


def _cmd_reconstruct(args, settings, engine):
    from homrep.graphs.graph_io import read_graphs
    from homrep.parameters.catalog import get_parameter
    from homrep.reconstruct.pipeline import reconstruct

    f = get_parameter(args.param)
    test_graphs = read_graphs(args.test_graphs) if args.test_graphs else None
    report = reconstruct(f, settings=settings, test_graphs=test_graphs, engine=engine, verbose=args.verbose)
    text = report.model_dump_json(indent=2) + "\n"
    if args.report:
        _emit(text, args.report)
    if report.target is not None and args.out:
        _emit(report.target.to_json() + "\n", args.out)
    if not args.report:
        sys.stdout.write(text)
    return STATUS_EXIT.get(report.status, EXIT_FAILED)


def _cmd_enumerate(args, settings, engine):
    from homrep.graphs.canonical import canonical
    from homrep.graphs.enumeration import enumerate_labeled

    graphs = enumerate_labeled(range(1, args.labels + 1), args.max_nodes, args.max_edges, multi=args.multi)
    codes = [canonical(g).text for g in graphs]
    if args.format == 'json':
        _emit(json.dumps(codes) + "\n", args.out)
    else:
        _emit("".join(code + "\n" for code in codes), args.out)
    return EXIT_OK


def _cmd_claims(args, settings, engine):
    from homrep.algebra.claims import run_claims
    from homrep.algebra.tower import AlgebraTower
    from homrep.parameters.catalog import get_parameter
    from homrep.reconstruct.pipeline import normalize

    f, _ = normalize(get_parameter(args.param))
    tower = AlgebraTower(f, settings.algebra_budget, settings.tolerances, settings.seed, engine)
    names = [n.strip() for n in args.only.split(",")] if args.only else None
    results = run_claims(tower, range(1, args.labels + 1), names)
    if args.format == 'json':
        algebras = [a.dump(tower.idempotents(range(1, s + 1))).model_dump() for s, a in tower.built().items()]
        payload = {"claims": [r.model_dump() for r in results], "algebras": algebras}
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        lines = [f"{r.name}\t{'pass' if r.passed else 'fail'}\t{r.max_residual:.3g}" for r in results]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


COMMANDS = {
    'hom': _cmd_hom,
    'param': _cmd_param,
    'connmat': _cmd_connmat,
    'flows': _cmd_flows,
    'reconstruct': _cmd_reconstruct,
    'enumerate': _cmd_enumerate,
    'claims': _cmd_claims,
}


def run(argv=None):
    """Parse argv, run one subcommand and return its exit status."""
    try:
        args = build_parser().parse_args(argv)
        settings = _settings(args)
    except GraphParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ContractViolation as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONTRACT

    logging.basicConfig(level=logging.DEBUG if args.verbose else settings.log_level,
                        format='%(asctime)s - %(levelname)s - %(message)s')

    from homrep.cache.evaluation_cache import EvaluationCache, set_evaluation_cache
    from homrep.engine.evaluation_engine import EvaluationEngine

    if settings.cache_dir:
        set_evaluation_cache(EvaluationCache(settings.cache_dir, settings.cache_max_entries))
    engine = EvaluationEngine(threads=settings.threads, verbose=args.verbose)
    try:
        return COMMANDS[args.command](args, settings, engine)
    except GraphParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (ContractViolation, HomrepError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONTRACT
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONTRACT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
