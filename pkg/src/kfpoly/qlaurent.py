"""Laurent polynomials in q with integer coefficients.

A QLaurent is an immutable map exponent -> nonzero coefficient.
"""
import json
import re


class QLaurent:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in dict(terms).items():
                c = int(c)
                if c:
                    t[int(e)] = t.get(int(e), 0) + c
        self._terms = {e: c for e, c in t.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # terms already canonical (no zero coefficients)
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self):
        if not self._terms:
            return None
        return max(self._terms)

    def low_degree(self):
        if not self._terms:
            return None
        return min(self._terms)

    def leading_coeff(self):
        if not self._terms:
            return 0
        return self._terms[max(self._terms)]

    def coeff(self, exp):
        return self._terms.get(exp, 0)

    def shift(self, k):
        """Multiply by q^k."""
        if k == 0:
            return self
        return QLaurent._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c):
        if c == 0:
            return ZERO
        return QLaurent._raw({e: v * c for e, v in self._terms.items()})

    @staticmethod
    def _coerce(other):
        if isinstance(other, QLaurent):
            return other
        if isinstance(other, int):
            return QLaurent.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        t = dict(self._terms)
        for e, c in other._terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return QLaurent._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                t[e1 + e2] = t.get(e1 + e2, 0) + c1 * c2
        return QLaurent._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        r = ONE
        for _ in range(k):
            r = r * self
        return r

    def __eq__(self, other):
        if isinstance(other, int):
            other = QLaurent.const(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __call__(self, x):
        return sum(c * x ** e for e, c in self._terms.items())

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e, c in self.items():
            if e == 0:
                mono = str(abs(c))
            else:
                base = "q" if e == 1 else "q^%d" % e
                mono = base if abs(c) == 1 else "%d%s" % (abs(c), base)
            sign = "-" if c < 0 else "+"
            out.append((sign, mono))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, mono in out[1:]:
            s += sign + mono
        return s

    def __repr__(self):
        return "QLaurent(%s)" % self

    def to_json(self):
        return {str(e): c for e, c in self.items()}

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=False)

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls({int(e): int(c) for e, c in obj.items()})


ZERO = QLaurent()
ONE = QLaurent({0: 1})
Q = QLaurent({1: 1})

_TERM = re.compile(r"([+-]?)(\d*)(q(?:\^(-?\d+))?)?")


def parse(text):
    """Parse the human form, e.g. 'q^7+q^6+2q^5-1' or 'q^-2'."""
    s = "".join(text.split())
    if s in ("", "0"):
        return ZERO
    terms = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError("cannot parse polynomial %r" % text)
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            e = int(m.group(4)) if m.group(4) is not None else 1
        else:
            e = 0
        terms[e] = terms.get(e, 0) + sign * c
        pos = m.end()
    return QLaurent(terms)


def geometric_ratio(num_exp, step):
    """(q^a - 1)/(q^s - 1) = 1 + q^s + ... + q^(a-s)."""
    if step <= 0 or num_exp < 0:
        raise ValueError("need a >= 0 and s > 0")
    if num_exp % step:
        raise ValueError("%d does not divide %d" % (step, num_exp))
    return QLaurent({e: 1 for e in range(0, num_exp, step)})


def eval_at_one(p):
    return sum(p.terms.values())


def is_poly_nonneg(p):
    """True when p has no negative exponent and no negative coefficient."""
    return all(e >= 0 and c > 0 for e, c in p.terms.items())
