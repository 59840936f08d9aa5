# graph_io.py
#
# Text format, one graph per block:
#   N M K
#   u v        (M lines, 0-based endpoints, repeats are parallel edges)
#   l v        (K lines, label l on node v)
# Blank lines separate blocks; '#' starts a comment.

import re

from homrep.graphs.canonical import decode
from homrep.graphs.labeled import LabeledGraph, label_first_nodes
from homrep.graphs.multigraph import MultiGraph, complete_graph, cycle_graph, empty_graph, path_graph
from homrep.utilities.errors import ContractViolation, GraphParseError


def _tokens(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _int(token, line, minimum=0):
    try:
        value = int(token)
    except ValueError:
        raise GraphParseError("expected an integer", line=line, token=token) from None
    if value < minimum:
        raise GraphParseError(f"expected an integer >= {minimum}", line=line, token=token)
    return value


def parse_graphs(text):
    lines = list(_tokens(text))
    graphs = []
    i = 0
    while i < len(lines):
        number, header = lines[i]
        if len(header) != 3:
            raise GraphParseError("header must be 'N M K'", line=number, token=" ".join(header))
        n, m, k = (_int(t, number) for t in header)
        body = lines[i + 1:i + 1 + m + k]
        if len(body) < m + k:
            raise GraphParseError(f"expected {m} edge lines and {k} label lines", line=number,
                                  token=" ".join(header))
        edges = []
        for line, parts in body[:m]:
            if len(parts) != 2:
                raise GraphParseError("edge line must be 'u v'", line=line, token=" ".join(parts))
            u, v = (_int(t, line) for t in parts)
            if u == v:
                raise GraphParseError("loops are not allowed", line=line, token=f"{u} {v}")
            if u >= n or v >= n:
                raise GraphParseError(f"endpoint out of range for {n} nodes", line=line, token=f"{u} {v}")
            edges.append((u, v))
        labels = {}
        for line, parts in body[m:]:
            if len(parts) != 2:
                raise GraphParseError("label line must be 'label node'", line=line, token=" ".join(parts))
            label = _int(parts[0], line, minimum=1)
            node = _int(parts[1], line)
            if node >= n:
                raise GraphParseError(f"labeled node out of range for {n} nodes", line=line, token=parts[1])
            if label in labels or node in labels.values():
                raise GraphParseError("labels must be injective", line=line, token=" ".join(parts))
            labels[label] = node
        graphs.append(LabeledGraph.make(MultiGraph.from_edges(n, edges), labels))
        i += 1 + m + k
    return graphs


def read_graphs(path):
    with open(path, "r") as file:
        return parse_graphs(file.read())


def format_graph(g):
    if isinstance(g, MultiGraph):
        g = LabeledGraph(g, ())
    lines = [f"{g.graph.node_count} {g.graph.edge_count} {len(g.labels)}"]
    lines += [f"{u} {v}" for u, v in g.graph.edge_list()]
    lines += [f"{label} {node}" for label, node in g.labels]
    return "\n".join(lines) + "\n"


def write_graphs(path, graphs):
    with open(path, "w") as file:
        file.write("\n".join(format_graph(g) for g in graphs))


_NAMED = re.compile(r"^([KOPC])(\d+)$")
_BUILDERS = {"K": complete_graph, "O": empty_graph, "P": path_graph, "C": cycle_graph}


def named_graph(token, k=0):
    """`K3`, `O2`, `P4`, `C5`, with the first min(k, n) nodes labeled 1.., or a canonical code."""
    token = token.strip()
    match = _NAMED.match(token)
    if match is None:
        if "|" in token:
            return decode(token)
        raise GraphParseError("unknown graph name; expected K<n>, O<n>, P<n>, C<n> or a canonical code",
                              token=token)
    kind, n = match.group(1), int(match.group(2))
    try:
        return label_first_nodes(_BUILDERS[kind](n), k)
    except ContractViolation as e:
        raise GraphParseError(str(e), token=token) from e


def parse_graph_list(text, k=0):
    return [named_graph(token, k) for token in text.split(",") if token.strip()]
