"""Cocyclage U(T), cyclage chains and graph export."""
import json
from dataclasses import dataclass
from itertools import permutations, product

from .crystal import format_letter
from .errors import KostkaError, PropertyViolation
from .rootdata import is_dominant
from .tableaux import Tableau, column_heights, p_stable, tableaux_of


def _key(t):
    """Rank-free identity of a tableau: its rows."""
    return tuple(tuple(r) for r in t.rows())


def ambient_rank(t):
    return max([abs(x) for x in t.reading] + [1])


def cocyclage_authorized(t):
    cols = t.columns()
    if len(cols) <= 1:
        return False
    n = ambient_rank(t)
    return any(n in c or -n not in c for c in cols)


def cocyclage(t):
    if not cocyclage_authorized(t):
        raise KostkaError("cocyclage is not authorized on %s" % t)
    w = t.reading
    u, _ = p_stable(w[1:] + w[:1], t.family)
    return u


@dataclass
class CyclageChain:
    nodes: list

    @property
    def terminal(self):
        return self.nodes[-1]

    def __len__(self):
        return len(self.nodes) - 1


def cyclage_chain(t, max_steps=1000):
    nodes = [t]
    seen = {_key(t)}
    cur = t
    for _ in range(max_steps):
        if not cocyclage_authorized(cur):
            return CyclageChain(nodes)
        cur = cocyclage(cur)
        k = _key(cur)
        if k in seen:
            raise PropertyViolation("cyclage chain repeats at %s" % cur)
        seen.add(k)
        nodes.append(cur)
    raise KostkaError("cyclage chain exceeded %d steps" % max_steps)


def _shapes(n, boxes, family):
    """Integer shapes with at most n rows and 1..boxes boxes."""
    out = []
    for parts in product(range(boxes + 1), repeat=n):
        if 0 < sum(parts) <= boxes and all(parts[i] >= parts[i + 1] for i in range(n - 1)):
            out.append(parts)
            if family == "D" and parts[-1] > 0:
                out.append(parts[:-1] + (-parts[-1],))
    return sorted(out, key=lambda s: (-sum(map(abs, s)), [-x for x in s]))


def weight_tableaux(family, n, mu, max_boxes):
    out = []
    for shape in _shapes(n, max_boxes, family):
        if is_dominant(family, shape):
            out += tableaux_of(family, n, shape, tuple(mu))
    return out


def cyclage_graph(tableaux):
    """Nodes and edges T -> U(T), closing up under U."""
    nodes = {}
    order = []
    edges = {}
    todo = list(tableaux)
    while todo:
        t = todo.pop(0)
        k = _key(t)
        if k in nodes:
            continue
        nodes[k] = t
        order.append(k)
        if cocyclage_authorized(t):
            u = cocyclage(t)
            edges[k] = _key(u)
            todo.append(u)
    return [nodes[k] for k in order], edges


def _label(t):
    return "\\n".join(" ".join(format_letter(x, True) for x in row) for row in t.rows())


def export_cyclage_graph(tableaux):
    nodes, edges = cyclage_graph(tableaux)
    ids = {_key(t): i for i, t in enumerate(nodes)}
    lines = ["digraph cyclage {"]
    for t in nodes:
        lines.append('  t%d [shape=box, label="%s"];' % (ids[_key(t)], _label(t)))
    for a, b in edges.items():
        lines.append("  t%d -> t%d;" % (ids[a], ids[b]))
    lines.append("}")
    return "\n".join(lines) + "\n"


def cyclage_json(tableaux):
    nodes, edges = cyclage_graph(tableaux)
    ids = {_key(t): i for i, t in enumerate(nodes)}
    return json.dumps({
        "nodes": [dict(t.to_json(), id=ids[_key(t)]) for t in nodes],
        "edges": [[ids[a], ids[b]] for a, b in edges.items()],
    }, sort_keys=True)


def compatible_labelings(tableaux, polys):
    """Labelings ch of the tableaux with ch(T) = ch(U(T)) + 1 on every edge
    inside the set and sum of q^ch over each shape equal to polys[shape].

    Edges leaving the set impose nothing. Exhaustive over the exponent
    multisets, so only meant for small sets.
    """
    keys = [_key(t) for t in tableaux]
    inside = set(keys)
    _, edges = cyclage_graph(tableaux)
    edges = {a: b for a, b in edges.items() if a in inside and b in inside}
    groups = {}
    for t in tableaux:
        groups.setdefault(t.shape, []).append(_key(t))
    shapes = sorted(groups)
    exps = {}
    for s in shapes:
        e = []
        for d, c in polys[s].items():
            if c < 0:
                return []
            e += [d] * c
        if len(e) != len(groups[s]):
            return []
        exps[s] = e
    out = []

    def rec(i, lab):
        if i == len(shapes):
            out.append(dict(lab))
            return
        s = shapes[i]
        for perm in sorted(set(permutations(exps[s]))):
            trial = dict(lab)
            trial.update(zip(groups[s], perm))
            if all(trial[a] == trial[b] + 1 for a, b in edges.items()
                   if a in trial and b in trial):
                rec(i + 1, trial)

    rec(0, {})
    return out
