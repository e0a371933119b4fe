"""
Lattice-point generating functions over the cells of a complex.

For Y a union of cells, E_Y = sum over lattice points e of Y of
q^{(A + C_{F_e}).e} t^{B.e}, where C_F is the weight vector attached to
the cell F containing e.  Each cell closure is triangulated and split
into half-open simplicial cones; the open cell is then recovered by
subtracting the generating functions of its proper faces.
"""
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import floor

from .algebra import FactoredRational, LaurentPoly, eq_rational, invert_variables, normalize, sum_rationals
from .geometry import (enumerate_cells, extreme_rays, face_leq, reciprocity_hypotheses,
                       region_cells, triangulate)
from .linalg import column_hnf, dot, integer_kernel, nullspace, rank, solve_combination


class HypothesisError(ValueError):
    """A theorem's hypotheses do not hold for the given input."""


class PiecewiseWeight:
    """Integer vector C_F per cell, keyed by sign vector; ``PiecewiseWeight.zero(m)`` is the constant 0."""

    def __init__(self, m, assignment=None):
        self.m = m
        self.assignment = None if assignment is None else {
            k: tuple(int(x) for x in v) for k, v in assignment.items()}
        if self.assignment:
            for v in self.assignment.values():
                if len(v) != m:
                    raise ValueError("weight vector %r does not have length %d" % (v, m))

    @classmethod
    def zero(cls, m):
        return cls(m)

    @property
    def is_zero(self):
        return self.assignment is None or all(not any(v) for v in self.assignment.values())

    def __call__(self, cell):
        if self.assignment is None:
            return (0,) * self.m
        try:
            return self.assignment[cell.signs if hasattr(cell, "signs") else cell]
        except KeyError:
            raise HypothesisError("weight is not defined on cell %s" % _label(cell)) from None


def _label(cell):
    return cell.label() if hasattr(cell, "label") else repr(cell)


@dataclass(frozen=True)
class GenFunSpec:
    A: tuple
    B: tuple
    gamma: PiecewiseWeight = None

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(int(x) for x in self.A))
        object.__setattr__(self, "B", tuple(int(x) for x in self.B))
        if len(self.A) != len(self.B):
            raise ValueError("A and B must have the same length")
        if self.gamma is None:
            object.__setattr__(self, "gamma", PiecewiseWeight.zero(len(self.A)))


def check_positivity(cx, spec):
    """Raise HypothesisError unless B.u > 0 on every extreme ray of the cone."""
    for u in extreme_rays(cx):
        if dot(spec.B, u) <= 0:
            raise HypothesisError("B.u = %d <= 0 on ray %r" % (dot(spec.B, u), u))


def validate_weight(cx, gamma, cells=None):
    """Check C_F - C_F' is orthogonal to span(F') for every pair F' <= F.

    Returns {"valid": bool, "violations": [...], "undefined": [...]}.
    """
    cells = enumerate_cells(cx) if cells is None else cells
    report = {"valid": True, "violations": [], "undefined": []}
    if gamma.assignment is None:
        return report
    missing = [c.label() for c in cells if c.signs not in gamma.assignment]
    if missing:
        report["valid"] = False
        report["undefined"] = missing
        return report
    for small in cells:
        if small.dim == 0:
            continue
        for big in cells:
            if big is small or not face_leq(small, big):
                continue
            diff = [a - b for a, b in zip(gamma(big), gamma(small))]
            bad = [r for r in small.rays if dot(diff, r) != 0]
            if bad:
                report["valid"] = False
                report["violations"].append({"face": small.label(), "cell": big.label(),
                                             "ray": list(bad[0])})
    return report


def parallelepiped_points(gens, open_flags=()):
    """Lattice points of sum_i I_i u_i, with I_i = (0,1] for i in open_flags and [0,1) otherwise.

    Residues of the saturated lattice modulo the generator lattice are
    enumerated from a triangular basis, then reduced into the box.
    """
    gens = [tuple(int(x) for x in u) for u in gens]
    k = len(gens)
    if k == 0:
        return [()]
    m = len(gens[0])
    if rank(gens) < k:
        raise ValueError("generators are linearly dependent")
    perp = nullspace([list(u) for u in gens], m) if k < m else []
    basis = integer_kernel(perp, m) if perp else [tuple(int(i == j) for j in range(m)) for i in range(m)]
    # coordinates of the generators in the lattice basis, as columns
    coords = [[int(c) for c in solve_combination(basis, u)] for u in gens]
    T = [[coords[j][i] for j in range(k)] for i in range(k)]
    H, _ = column_hnf(T)
    diag = [H[i][i] for i in range(k)]
    opened = set(open_flags)
    points = []
    for c in product(*(range(d) for d in diag)):
        p = [sum(basis[i][r] * c[i] for i in range(k)) for r in range(m)]
        lam = solve_combination(gens, p)
        fr = []
        for i, x in enumerate(lam):
            f = x - floor(x)
            if f == 0 and i in opened:
                f = Fraction(1)
            fr.append(f)
        e = tuple(int(sum(f * u[r] for f, u in zip(fr, gens))) for r in range(m))
        points.append(e)
    return sorted(points)


def genfun_halfopen_simplicial(gens, open_flags, C, B):
    """Generating function of the half-open simplicial cone with weight q^{C.e} t^{B.e}.

    open_flags lists (0-based) generators whose opposite facet is removed.
    """
    gens = [tuple(u) for u in gens]
    for u in gens:
        if dot(B, u) <= 0:
            raise HypothesisError("B.u <= 0 for generator %r" % (u,))
    pts = parallelepiped_points(gens, open_flags)
    num = LaurentPoly([((dot(C, e), dot(B, e)), 1) for e in pts])
    return FactoredRational(num, [(dot(C, u), dot(B, u)) for u in gens])


def halfopen_decomposition(rays, interior=False):
    """Split the cone over rays into half-open simplicial pieces.

    Returns [(simplex generators, open flags)].  The reference point is the
    ray sum pushed off every wall by a lexicographic perturbation along
    the rays themselves, so the choice is deterministic.  With
    interior=True the pieces tile the relative interior instead of the
    closed cone.
    """
    rays = [tuple(r) for r in rays]
    if not rays:
        return []
    y0 = tuple(sum(col) for col in zip(*rays))
    probes = [y0] + rays
    out = []
    for simplex in triangulate(rays):
        coords = [solve_combination(simplex, p) for p in probes]
        flags = []
        for j in range(len(simplex)):
            s = next((1 if c[j] > 0 else -1 for c in coords if c[j] != 0), 0)
            if s == 0:
                raise AssertionError("reference point is not generic")
            if (s < 0) != interior:
                flags.append(j)
        out.append((simplex, tuple(flags)))
    return out


class GenFunEngine:
    """Generating functions for one complex and one (A, B, gamma).

    Cell generating functions are memoized; the memo is write-once per
    key so concurrent population is harmless.
    """

    def __init__(self, cx, spec, check=True):
        self.cx = cx
        self.spec = spec
        if len(spec.A) != cx.dim:
            raise ValueError("A, B must have length %d" % cx.dim)
        if check:
            check_positivity(cx, spec)
        self.cells = enumerate_cells(cx)
        self._memo = {}
        self._lock = threading.Lock()

    def weight(self, cell):
        return tuple(a + c for a, c in zip(self.spec.A, self.spec.gamma(cell)))

    def faces(self, cell):
        return [f for f in self.cells if face_leq(f, cell)]

    def closure(self, cell):
        """E over the closure of a cell, using C_F for every point (valid by compatibility)."""
        if cell.dim == 0:
            return FactoredRational.one()
        C = self.weight(cell)
        pieces = [genfun_halfopen_simplicial(s, J, C, self.spec.B)
                  for s, J in halfopen_decomposition(cell.rays)]
        return sum_rationals(pieces)

    def cell(self, cell):
        key = cell.signs
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if cell.dim == 0:
            value = FactoredRational.one()
        else:
            proper = [self.cell(f) for f in self.faces(cell) if f != cell]
            value = sum_rationals([self.closure(cell)] + [-p for p in proper])
        with self._lock:
            return self._memo.setdefault(key, value)

    def open_cell(self, cell):
        """E over the relatively open cell straight from an interior half-open tiling."""
        if cell.dim == 0:
            return FactoredRational.one()
        C = self.weight(cell)
        return sum_rationals([genfun_halfopen_simplicial(s, J, C, self.spec.B)
                              for s, J in halfopen_decomposition(cell.rays, interior=True)])

    def region(self, I):
        return normalize(sum_rationals([self.cell(c) for c in region_cells(self.cells, I)]))


def genfun_cell(cx, cell, spec):
    return GenFunEngine(cx, spec).cell(cell)


def genfun_region(cx, I, spec, engine=None):
    engine = engine or GenFunEngine(cx, spec)
    return engine.region(I)


@dataclass
class ReciprocityVerdict:
    I: tuple
    holds: bool
    lhs: FactoredRational = field(repr=False)
    rhs: FactoredRational = field(repr=False)


def check_reciprocity(cx, I, spec, engine=None):
    """Compare E_{C_I}(1/q, 1/t) with (-1)^m E_{C_{[m]-I}}.

    Raises HypothesisError if the cone is not simplicial with exactly m
    bounding hyperplanes and full dimension, or if B fails positivity.
    """
    problems = reciprocity_hypotheses(cx)
    if problems:
        raise HypothesisError("; ".join(problems))
    engine = engine or GenFunEngine(cx, spec)
    m = cx.dim
    I = tuple(sorted(I))
    comp = tuple(i for i in range(len(cx.bounding)) if i not in I)
    lhs = invert_variables(engine.region(I))
    rhs = engine.region(comp) * (-1) ** m
    return ReciprocityVerdict(I, eq_rational(lhs, rhs), lhs, rhs)


def euler_sum(cells, f0, I):
    """Sum of (-1)^dim F over cells F >= f0 inside C_I."""
    return sum((-1) ** f.dim for f in region_cells(cells, I) if face_leq(f0, f))


def euler_expected(cells, f0, I, m):
    """What the dimension-counting identity predicts for euler_sum."""
    comp = [i for i in range(len(f0.bounding_signs)) if i not in set(I)]
    inside = all(f0.bounding_signs[i] for i in comp)
    return (-1) ** m if inside else 0
