"""Crystal operators on words over the vector representation.

Letters are signed ints: i > 0 is the letter i, -i is i-bar, 0 is the
letter 0 of type B. Type A uses letters 1..n. A word x1 x2 ... xl is the
tensor product x1 (x) x2 (x) ... (x) xl in Kashiwara's convention.
"""
from collections import deque
from functools import lru_cache

from .errors import CapExceeded, TransportError

COMPONENT_CAP = 10 ** 6


@lru_cache(maxsize=None)
def vector_edges(family, rank):
    """Colored edges (source, color, target) of the vector crystal."""
    n = rank
    edges = []
    if family == "A":
        if n < 1:
            raise ValueError("invalid rank")
        for i in range(1, n):
            edges.append((i, i, i + 1))
        return tuple(edges)
    if family in ("B", "C") and n < 1 or family == "D" and n < 2:
        raise ValueError("invalid rank %d for type %s" % (n, family))
    top = 2 if family == "D" else 1
    for i in range(n - 1, top - 1, -1):
        edges.append((-(i + 1), i, -i))
    if family == "B":
        edges += [(-1, 0, 0), (0, 0, 1)]
    elif family == "C":
        edges.append((-1, 0, 1))
    else:
        edges += [(-2, 1, -1), (-2, 0, 1), (-1, 0, 2), (1, 1, 2)]
    for i in range(top, n):
        edges.append((i, i, i + 1))
    return tuple(edges)


@lru_cache(maxsize=None)
def letters(family, rank):
    if family == "A":
        return tuple(range(1, rank + 1))
    out = [-i for i in range(rank, 0, -1)]
    if family == "B":
        out.append(0)
    return tuple(out + list(range(1, rank + 1)))


@lru_cache(maxsize=None)
def colors(family, rank):
    if family == "A":
        return tuple(range(1, rank))
    return tuple(range(rank))


class _Table:
    """Per-letter f, e, eps, phi for each color."""

    def __init__(self, family, rank):
        self.f = {}
        self.e = {}
        for s, c, t in vector_edges(family, rank):
            self.f[(s, c)] = t
            self.e[(t, c)] = s
        self.eps = {}
        self.phi = {}
        for x in letters(family, rank):
            for c in colors(family, rank):
                k, y = 0, x
                while (y, c) in self.e:
                    y = self.e[(y, c)]
                    k += 1
                self.eps[(x, c)] = k
                k, y = 0, x
                while (y, c) in self.f:
                    y = self.f[(y, c)]
                    k += 1
                self.phi[(x, c)] = k


@lru_cache(maxsize=None)
def _table(family, rank):
    return _Table(family, rank)


def _check_color(family, rank, color):
    if color not in colors(family, rank):
        raise ValueError("invalid color %r for %s%d" % (color, family, rank))


def _signature(word, color, tab):
    """Unmatched minus positions (left to right) and unmatched plus positions."""
    minus = []
    plus = []  # stack of positions of uncancelled '+'
    for pos, x in enumerate(word):
        for _ in range(tab.eps.get((x, color), 0)):
            if plus:
                plus.pop()
            else:
                minus.append(pos)
        for _ in range(tab.phi.get((x, color), 0)):
            plus.append(pos)
    return minus, plus


def eps_phi(word, color, family, rank):
    _check_color(family, rank, color)
    minus, plus = _signature(word, color, _table(family, rank))
    return len(minus), len(plus)


def e_op(word, color, family, rank):
    """e_i(word) as a tuple, or None."""
    _check_color(family, rank, color)
    tab = _table(family, rank)
    minus, _ = _signature(word, color, tab)
    if not minus:
        return None
    pos = minus[-1]
    w = list(word)
    w[pos] = tab.e[(w[pos], color)]
    return tuple(w)


def f_op(word, color, family, rank):
    """f_i(word) as a tuple, or None."""
    _check_color(family, rank, color)
    tab = _table(family, rank)
    _, plus = _signature(word, color, tab)
    if not plus:
        return None
    pos = plus[0]
    w = list(word)
    w[pos] = tab.f[(w[pos], color)]
    return tuple(w)


def weight_of(word, family, rank):
    """Weight as an int tuple in the order (n-bar, ..., 1-bar); content for type A."""
    wt = [0] * rank
    for x in word:
        if family == "A":
            wt[x - 1] += 1
        elif x < 0:
            wt[rank + x] += 1
        elif x > 0:
            wt[rank - x] -= 1
    return tuple(wt)


def is_highest(word, family, rank):
    return all(e_op(word, c, family, rank) is None for c in colors(family, rank))


def raise_to_highest(word, family, rank, order="smallest"):
    """Apply e_i (smallest applicable color first) until highest weight.

    Returns (hw, path) where path lists the colors in application order.
    """
    cs = colors(family, rank)
    if order == "largest":
        cs = tuple(reversed(cs))
    w = tuple(word)
    path = []
    while True:
        for c in cs:
            v = e_op(w, c, family, rank)
            if v is not None:
                w = v
                path.append(c)
                break
        else:
            return w, tuple(path)


def transport(path, target, family, rank):
    """Replay a raising path backwards with f operators from target."""
    w = tuple(target)
    for c in reversed(path):
        v = f_op(w, c, family, rank)
        if v is None:
            raise TransportError("f_%d undefined on %s during transport" % (c, format_word(w)))
        w = v
    return w


def weyl_crystal_action(word, color, family, rank):
    """s_i acting on a crystal vertex."""
    e, p = eps_phi(word, color, family, rank)
    w = tuple(word)
    if p >= e:
        for _ in range(p - e):
            w = f_op(w, color, family, rank)
    else:
        for _ in range(e - p):
            w = e_op(w, color, family, rank)
    return w


def generate_component(seed, family, rank, cap=COMPONENT_CAP):
    """Connected component of seed, as a set of tuples."""
    seed = tuple(seed)
    cs = colors(family, rank)
    only_f = is_highest(seed, family, rank)
    seen = {seed}
    queue = deque([seed])
    while queue:
        w = queue.popleft()
        for c in cs:
            nbrs = [f_op(w, c, family, rank)]
            if not only_f:
                nbrs.append(e_op(w, c, family, rank))
            for v in nbrs:
                if v is not None and v not in seen:
                    seen.add(v)
                    if len(seen) > cap:
                        raise CapExceeded("component exceeds %d vertices" % cap)
                    queue.append(v)
    return seen


def component_dot(vertices, family, rank):
    """Graphviz text of a set of vertices with their f edges."""
    vs = sorted(vertices)
    ids = {v: i for i, v in enumerate(vs)}
    lines = ["digraph crystal {"]
    for v in vs:
        lines.append('  n%d [label="%s"];' % (ids[v], format_word(v, human=True)))
    for v in vs:
        for c in colors(family, rank):
            u = f_op(v, c, family, rank)
            if u in ids:
                lines.append('  n%d -> n%d [label="%d"];' % (ids[v], ids[u], c))
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_letter(x, human=False):
    if x < 0:
        return "%d̄" % -x if human else str(x)
    return str(x)


def format_word(word, human=False):
    return " ".join(format_letter(x, human) for x in word)


def parse_word(text):
    """Machine form: space separated ints, bars written as a leading '-'."""
    text = text.replace("̄", "").strip()
    if not text:
        return ()
    return tuple(int(t) for t in text.replace(",", " ").split())
