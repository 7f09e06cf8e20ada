"""Root systems A, B, C, D in barred coordinates (b_n, ..., b_1).

Index 0 of every weight tuple is the coordinate of n-bar, the last index
is the coordinate of 1-bar. For family A index 0 is the largest part.
Weights are kept doubled so that half-integers stay exact.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial

from .errors import CapExceeded

FAMILIES = ("A", "B", "C", "D")
WEYL_CAP = 10 ** 7


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r" % (self.family,))
        low = 2 if self.family == "D" else 1
        if self.rank < low:
            raise ValueError("rank %d too small for type %s" % (self.rank, self.family))

    def __str__(self):
        return "%s%d" % (self.family, self.rank)


@dataclass(frozen=True)
class Weight:
    doubled: tuple

    @classmethod
    def of(cls, parts):
        """Build from ints, Fractions or strings like '3/2'."""
        if isinstance(parts, Weight):
            return parts
        d = []
        for x in parts:
            f = Fraction(x) if not isinstance(x, Fraction) else x
            if (2 * f).denominator != 1:
                raise ValueError("not a half-integer: %r" % (x,))
            d.append(int(2 * f))
        return cls(tuple(d))

    @property
    def parts(self):
        return tuple(x // 2 if x % 2 == 0 else Fraction(x, 2) for x in self.doubled)

    def is_integral(self):
        return all(x % 2 == 0 for x in self.doubled)

    def int_parts(self):
        if not self.is_integral():
            raise ValueError("weight has half-integer parts")
        return tuple(x // 2 for x in self.doubled)

    def __len__(self):
        return len(self.doubled)

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __str__(self):
        return format_weight(self.parts)


def format_weight(parts):
    return ",".join(str(p) for p in parts)


def parse_weight(text):
    text = text.strip()
    if not text:
        return Weight(())
    return Weight.of([Fraction(t.strip()) for t in text.split(",")])


def is_dominant(family, parts):
    """Dominance of a weight given as plain parts (ints or Fractions)."""
    d = Weight.of(parts).doubled
    n = len(d)
    if family in ("A", "C") and any(x % 2 for x in d):
        return False
    if len({x % 2 for x in d}) > 1:
        return False
    if any(d[i] < d[i + 1] for i in range(n - 2)):
        return False
    if n < 2:
        return family == "A" or not d or d[0] >= 0
    if family == "D":
        return d[n - 2] >= abs(d[n - 1])
    if d[n - 2] < d[n - 1]:
        return False
    return family == "A" or d[n - 1] >= 0


def size(parts):
    """|lambda|; the last part enters by absolute value (type D)."""
    return sum(abs(x) for x in parts)


def star(parts):
    """Negate the last coordinate (type D duality)."""
    return tuple(parts[:-1]) + (-parts[-1],)


def truncate(parts):
    """lambda' : drop the n-bar coordinate."""
    return tuple(parts[1:])


def _unit(n, i, c=2):
    """Doubled c/2 * eps_{i-bar}, i in 1..n."""
    v = [0] * n
    v[n - i] = c
    return v


def positive_roots(sys):
    n, fam = sys.rank, sys.family
    roots = []
    for i in range(2, n + 1):
        for j in range(1, i):
            a, b = _unit(n, i), _unit(n, j)
            roots.append(Weight(tuple(x - y for x, y in zip(a, b))))
            if fam != "A":
                roots.append(Weight(tuple(x + y for x, y in zip(a, b))))
    if fam == "B":
        roots += [Weight(tuple(_unit(n, i))) for i in range(1, n + 1)]
    elif fam == "C":
        roots += [Weight(tuple(_unit(n, i, 4))) for i in range(1, n + 1)]
    return roots


def rho(sys):
    n = sys.rank
    if sys.family == "B":
        return Weight(tuple(2 * n - 1 - 2 * k for k in range(n)))
    if sys.family == "C":
        return Weight(tuple(2 * (n - k) for k in range(n)))
    return Weight(tuple(2 * (n - 1 - k) for k in range(n)))


def simple_roots(sys):
    """List of (color, Weight) for the simple roots."""
    n = sys.rank
    out = []
    if sys.family == "B":
        out.append((0, Weight(tuple(_unit(n, 1)))))
    elif sys.family == "C":
        out.append((0, Weight(tuple(_unit(n, 1, 4)))))
    elif sys.family == "D":
        out.append((0, Weight(tuple(x + y for x, y in zip(_unit(n, 1), _unit(n, 2))))))
    for i in range(1, n):
        a, b = _unit(n, i + 1), _unit(n, i)
        out.append((i, Weight(tuple(x - y for x, y in zip(a, b)))))
    return out


def simple_root_coords_doubled(family, n, d):
    """Coordinates of a doubled weight on the simple roots, or None.

    B/C/D return (c_0, ..., c_{n-1}); A returns (c_1, ..., c_{n-1}).
    """
    # S[m] = doubled sum of the m highest coordinates = 2 * sum_{i > n-m} b_i
    S = [0] * (n + 1)
    for m in range(n):
        S[m + 1] = S[m] + d[m]
    out = []
    if family == "A":
        if S[n] != 0:
            return None
        js = range(1, n)
    else:
        js = range(n)
    for j in js:
        if j == 0 and family in ("C", "D"):
            num, den = S[n], 4
        elif j == 1 and family == "D":
            num, den = S[n] - 2 * d[n - 1], 4
        else:
            num, den = S[n - j], 2
        if num < 0 or num % den:
            return None
        out.append(num // den)
    return tuple(out)


def simple_root_coords(sys, beta):
    return simple_root_coords_doubled(sys.family, sys.rank, Weight.of(beta).doubled)


@dataclass(frozen=True)
class SignedPerm:
    perm: tuple
    flips: tuple

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (1,) * n)

    def compose(self, other):
        """self * other, acting as self(other(beta))."""
        perm = tuple(other.perm[p] for p in self.perm)
        flips = tuple(f * other.flips[p] for f, p in zip(self.flips, self.perm))
        return SignedPerm(perm, flips)


def perm_parity(p):
    seen = [False] * len(p)
    s = 1
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def sign(sigma):
    s = perm_parity(sigma.perm)
    for f in sigma.flips:
        s *= f
    return s


def weyl_order(sys):
    n = sys.rank
    if sys.family == "A":
        return factorial(n)
    if sys.family == "D":
        return 2 ** (n - 1) * factorial(n)
    return 2 ** n * factorial(n)


def weyl_elements(sys, cap=WEYL_CAP):
    if weyl_order(sys) > cap:
        raise CapExceeded("Weyl group of %s has %d elements (cap %d)" % (sys, weyl_order(sys), cap))
    n = sys.rank
    for p in permutations(range(n)):
        if sys.family == "A":
            yield SignedPerm(p, (1,) * n)
            continue
        for mask in product((0, 1), repeat=n):
            if sys.family == "D" and sum(mask) % 2:
                continue
            yield SignedPerm(p, tuple(-1 if m else 1 for m in mask))


def act_doubled(sigma, d):
    return tuple(f * d[p] for f, p in zip(sigma.flips, sigma.perm))


def act(sigma, beta):
    return Weight(act_doubled(sigma, Weight.of(beta).doubled))


def dot_action(sys, sigma, beta):
    r = rho(sys).doubled
    b = Weight.of(beta).doubled
    moved = act_doubled(sigma, tuple(x + y for x, y in zip(b, r)))
    return Weight(tuple(x - y for x, y in zip(moved, r)))


def simple_reflection(sys, i):
    """s_i as a signed permutation (s_0 for B/C, s_0' for D)."""
    n = sys.rank
    perm = list(range(n))
    flips = [1] * n
    if i == 0:
        if sys.family == "A":
            raise ValueError("type A has no color 0")
        if sys.family == "D":
            perm[n - 1], perm[n - 2] = n - 2, n - 1
            flips[n - 1] = flips[n - 2] = -1
        else:
            flips[n - 1] = -1
    else:
        a, b = n - i - 1, n - i
        perm[a], perm[b] = b, a
    return SignedPerm(tuple(perm), tuple(flips))
