"""
Classical root systems and their Weyl groups.

Roots live in the usual ambient coordinates (A_l in R^{l+1}, the others in
R^l), so every reflection is an integer matrix.  Group elements are
enumerated breadth-first from the identity; the BFS depth is the length.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import dot, solve_combination

DEFAULT_BOUND = 10 ** 4


class RootSystemError(ValueError):
    pass


def _e(i, n):
    return tuple(int(j == i) for j in range(n))


def _add(u, v, s=1):
    return tuple(a + s * b for a, b in zip(u, v))


def _neg(v):
    return tuple(-x for x in v)


@dataclass(frozen=True)
class RootSystem:
    cartan_type: str
    rank: int
    simple_roots: tuple
    positive_roots: tuple

    @property
    def ambient_dim(self):
        return len(self.simple_roots[0]) if self.simple_roots else 0

    @property
    def roots(self):
        return self.positive_roots + tuple(_neg(a) for a in self.positive_roots)

    def simple_coefficients(self, root):
        """Coordinates of a root in the basis of simple roots."""
        c = solve_combination(self.simple_roots, root)
        if c is None:
            raise RootSystemError("%r is not in the span of the simple roots" % (root,))
        return tuple(int(x) for x in c)


def build_root_system(cartan_type, l):
    """Standard root system of type A, B, C or D and rank l."""
    t = str(cartan_type).upper()
    if t not in "ABCD" or len(t) != 1:
        raise RootSystemError("unsupported Cartan type %r" % (cartan_type,))
    if not isinstance(l, int) or l < 1 or (t == "D" and l < 2):
        raise RootSystemError("unsupported rank %r for type %s" % (l, t))
    if t == "A":
        n = l + 1
        e = [_e(i, n) for i in range(n)]
        simple = [_add(e[i], e[i + 1], -1) for i in range(l)]
        pos = [_add(e[i], e[j], -1) for i in range(n) for j in range(i + 1, n)]
    else:
        n = l
        e = [_e(i, n) for i in range(n)]
        pos = [_add(e[i], e[j], -1) for i in range(n) for j in range(i + 1, n)]
        pos += [_add(e[i], e[j]) for i in range(n) for j in range(i + 1, n)]
        simple = [_add(e[i], e[i + 1], -1) for i in range(l - 1)]
        if t == "B":
            pos += e
            simple.append(e[-1])
        elif t == "C":
            pos += [tuple(2 * x for x in v) for v in e]
            simple.append(tuple(2 * x for x in e[-1]))
        else:
            simple.append(_add(e[-2], e[-1]))
    return RootSystem(t, l, tuple(simple), tuple(sorted(pos)))


def root_system_from_simple_roots(simple_roots):
    """Root system generated by explicit simple roots (any crystallographic type)."""
    simple = [tuple(int(x) for x in a) for a in simple_roots]
    if not simple:
        raise RootSystemError("need at least one simple root")
    refl = [reflection_matrix(a) for a in simple]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for s in refl:
                v = _apply(s, r)
                if v not in roots:
                    roots.add(v)
                    nxt.append(v)
                    if len(roots) > 2 * DEFAULT_BOUND:
                        raise RootSystemError("root orbit is not finite")
        frontier = nxt
    pos = []
    for r in roots:
        c = solve_combination(simple, r)
        if c is None or any(x.denominator != 1 for x in c):
            raise RootSystemError("simple roots do not form a root basis")
        if all(x >= 0 for x in c):
            pos.append(r)
        elif not all(x <= 0 for x in c):
            raise RootSystemError("root %r is neither positive nor negative" % (r,))
    return RootSystem("custom", len(simple), tuple(simple), tuple(sorted(pos)))


def reflection_matrix(alpha):
    """Matrix of v -> v - 2 (v.alpha)/(alpha.alpha) alpha; must be integral."""
    n = len(alpha)
    aa = dot(alpha, alpha)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = Fraction(int(i == j)) - Fraction(2 * alpha[i] * alpha[j], aa)
            if v.denominator != 1:
                raise RootSystemError("reflection in %r is not integral" % (alpha,))
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


def _apply(M, v):
    return tuple(dot(row, v) for row in M)


def _matmul(A, B):
    cols = list(zip(*B))
    return tuple(tuple(dot(row, c) for c in cols) for row in A)


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple
    length: int
    word: tuple = field(compare=False)

    def apply(self, v):
        return _apply(self.matrix, v)

    def __mul__(self, other):
        return _matmul(self.matrix, other.matrix)


class WeylGroup:
    """All elements of W(rs), indexed by matrix."""

    def __init__(self, rs, bound=DEFAULT_BOUND):
        self.rs = rs
        self.elements = enumerate_weyl(rs, bound)
        self.by_matrix = {w.matrix: w for w in self.elements}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def longest(self):
        return max(self.elements, key=lambda w: w.length)

    def product(self, u, v):
        return self.by_matrix[_matmul(u.matrix, v.matrix)]


def enumerate_weyl(rs, bound=DEFAULT_BOUND):
    """Breadth-first closure of the identity under right multiplication by simple reflections."""
    n = rs.ambient_dim
    ident = tuple(_e(i, n) for i in range(n))
    gens = [reflection_matrix(a) for a in rs.simple_roots]
    seen = {ident: WeylElement(ident, 0, ())}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        w = seen[g]
        for i, s in enumerate(gens):
            h = _matmul(g, s)
            if h not in seen:
                if len(seen) >= bound:
                    raise RootSystemError("Weyl group exceeds the bound of %d elements" % bound)
                seen[h] = WeylElement(h, w.length + 1, w.word + (i + 1,))
                queue.append(h)
    return sorted(seen.values(), key=lambda w: (w.length, w.word))


def longest_element(rs, group=None):
    group = group or WeylGroup(rs)
    return group.longest()


def inversion_count(rs, w):
    """Number of positive roots sent to negative roots."""
    pos = set(rs.positive_roots)
    return sum(1 for a in rs.positive_roots if w.apply(a) not in pos)


def descent_set(rs, w):
    """I_w = {i : alpha_i in w(Phi^-)}, 1-based."""
    image = {w.apply(_neg(a)) for a in rs.positive_roots}
    return frozenset(i + 1 for i, a in enumerate(rs.simple_roots) if a in image)


CLASSICAL_DEGREES = {
    "A": lambda l: list(range(2, l + 2)),
    "B": lambda l: [2 * i for i in range(1, l + 1)],
    "C": lambda l: [2 * i for i in range(1, l + 1)],
    "D": lambda l: [2 * i for i in range(1, l)] + [l],
}


def poincare_polynomial(rs):
    """Coefficient list of prod_i (1 + q + ... + q^{d_i - 1}) for the classical degrees."""
    coeffs = [1]
    for d in CLASSICAL_DEGREES[rs.cartan_type](rs.rank):
        new = [0] * (len(coeffs) + d - 1)
        for i, c in enumerate(coeffs):
            for j in range(d):
                new[i + j] += c
        coeffs = new
    return coeffs


def length_generating_polynomial(group):
    top = max(w.length for w in group)
    coeffs = [0] * (top + 1)
    for w in group:
        coeffs[w.length] += 1
    return coeffs
