"""
Rational polyhedral cell complexes.

A complex lives in R^m and is given by bounding hyperplanes (the cone is
the intersection of their closed positive sides) and internal hyperplanes
that cut the cone into relatively open cells.  A cell is identified by its
sign vector: 0/1 on each bounding hyperplane and -1/0/1 on each internal
one.
"""
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from functools import reduce

from .linalg import dot, nullspace, rank, lattice_index


class GeometryError(ValueError):
    pass


class NotPointedError(GeometryError):
    pass


def _primitive_normal(v):
    v = tuple(int(x) for x in v)
    g = reduce(gcd, v, 0)
    if g == 0:
        raise GeometryError("hyperplane normal must be nonzero")
    return tuple(x // g for x in v)


@dataclass(frozen=True)
class CellComplex:
    dim: int
    bounding: tuple
    internal: tuple = ()

    def __post_init__(self):
        bounding = tuple(_primitive_normal(v) for v in self.bounding)
        internal = tuple(_primitive_normal(v) for v in self.internal)
        for v in bounding + internal:
            if len(v) != self.dim:
                raise GeometryError("normal %r does not have length %d" % (v, self.dim))
        if len(set(bounding)) != len(bounding):
            raise GeometryError("duplicate bounding hyperplane")
        seen = set()
        for v in internal:
            if v in seen or tuple(-x for x in v) in seen:
                raise GeometryError("duplicate internal hyperplane %r" % (v,))
            seen.add(v)
        object.__setattr__(self, "bounding", bounding)
        object.__setattr__(self, "internal", internal)

    @property
    def normals(self):
        return self.bounding + self.internal

    def signs_of(self, e):
        """Sign vector of the cell containing the point e (assumed in the cone)."""
        b = tuple(1 if dot(h, e) > 0 else 0 for h in self.bounding)
        i = tuple((dot(h, e) > 0) - (dot(h, e) < 0) for h in self.internal)
        return b, i

    def contains(self, e):
        return all(dot(h, e) >= 0 for h in self.bounding)


@dataclass(frozen=True, eq=False)
class Cell:
    bounding_signs: tuple
    internal_signs: tuple
    dim: int
    rays: tuple = field(repr=False)

    @property
    def signs(self):
        return (self.bounding_signs, self.internal_signs)

    def __eq__(self, other):
        return isinstance(other, Cell) and self.signs == other.signs

    def __hash__(self):
        return hash(self.signs)

    def label(self):
        b = "".join("+" if s else "0" for s in self.bounding_signs)
        i = "".join({1: "+", 0: "0", -1: "-"}[s] for s in self.internal_signs)
        return b + ("|" + i if i else "")


def closure_constraints(cx, signs):
    """(equalities, inequalities) describing the closure of a sign region."""
    bsigns, isigns = signs
    eqs, ineqs = [], []
    for h, s in zip(cx.bounding, bsigns):
        (ineqs if s else eqs).append(h)
    for h, s in zip(cx.internal, isigns):
        if s == 0:
            eqs.append(h)
        else:
            ineqs.append(tuple(s * x for x in h))
    return eqs, ineqs


def cone_rays(eqs, ineqs, m):
    """Extreme rays of {x : E x = 0, G x >= 0} as sorted primitive vectors.

    Raises NotPointedError if the cone contains a line.
    """
    eqs = [tuple(v) for v in eqs]
    ineqs = [tuple(v) for v in ineqs]
    if rank(eqs + ineqs) < m:
        raise NotPointedError("cone contains a line")
    r_eq = rank(eqs)
    need = m - 1 - r_eq
    if need < 0:
        return ()
    found = set()
    for subset in combinations(range(len(ineqs)), need):
        rows = eqs + [ineqs[i] for i in subset]
        if rank(rows) != m - 1:
            continue
        (v,) = nullspace(rows, m)
        for cand in (v, tuple(-x for x in v)):
            if all(dot(g, cand) >= 0 for g in ineqs):
                found.add(cand)
                break
    return tuple(sorted(found))


def extreme_rays(cx, signs=None):
    """Extreme rays of the closure of a cell, or of the whole cone when signs is None."""
    if signs is None:
        return cone_rays([], cx.bounding, cx.dim)
    eqs, ineqs = closure_constraints(cx, signs)
    return cone_rays(eqs, ineqs, cx.dim)


def cell_feasible(cx, signs):
    """True iff the relatively open region with these signs is nonempty.

    The closure {E x = 0, G x >= 0} is pointed inside a pointed cone; the
    open region is nonempty iff every strict row is positive on some
    extreme ray of the closure (then the sum of the rays is a witness).
    """
    eqs, ineqs = closure_constraints(cx, signs)
    rays = cone_rays(eqs, ineqs, cx.dim)
    return all(any(dot(g, r) > 0 for r in rays) for g in ineqs)


def enumerate_cells(cx):
    """All nonempty cells, sorted by (dim, sign vector)."""
    m = cx.dim
    cone = extreme_rays(cx)
    cells = []
    # faces of the cone: a face is cut out by the bounding hyperplanes vanishing on it
    faces = {}
    for k in range(len(cone) + 1):
        for sub in combinations(cone, k):
            bsigns = tuple(1 if any(dot(h, r) > 0 for r in sub) else 0 for h in cx.bounding)
            if bsigns not in faces:
                faces[bsigns] = None
    for bsigns in faces:
        signs = (bsigns, ())
        eqs, ineqs = closure_constraints(_Prefix(cx, 0), signs)
        rays = cone_rays(eqs, ineqs, m)
        if all(any(dot(g, r) > 0 for r in rays) for g in ineqs):
            cells.append((bsigns, (), rays))
    for j, h in enumerate(cx.internal):
        sub = _Prefix(cx, j + 1)
        refined = []
        for bsigns, isigns, rays in cells:
            vals = [dot(h, r) for r in rays]
            pos = any(v > 0 for v in vals)
            neg = any(v < 0 for v in vals)
            if not (pos and neg):
                s = 1 if pos else (-1 if neg else 0)
                refined.append((bsigns, isigns + (s,), rays))
                continue
            for s in (-1, 0, 1):
                signs = (bsigns, isigns + (s,))
                eqs, ineqs = closure_constraints(sub, signs)
                refined.append((bsigns, isigns + (s,), cone_rays(eqs, ineqs, m)))
        cells = refined
    out = [Cell(b, i, rank(list(r)), r) for b, i, r in cells]
    out.sort(key=lambda c: (c.dim, c.signs))
    return out


class _Prefix:
    """The complex restricted to its first j internal hyperplanes (no validation)."""

    def __init__(self, cx, j):
        self.dim = cx.dim
        self.bounding = cx.bounding
        self.internal = cx.internal[:j]


def face_leq(f1, f2):
    """closure(f1) inside closure(f2), by the sign-vector rule."""
    return all(a == 0 or a == b for a, b in zip(f1.bounding_signs, f2.bounding_signs)) and \
        all(a == 0 or a == b for a, b in zip(f1.internal_signs, f2.internal_signs))


def region_cells(cells, I):
    """Cells inside C_I: strictly positive on every bounding hyperplane in I (0-based)."""
    I = set(I)
    return [c for c in cells if all(c.bounding_signs[i] for i in I)]


def is_simplicial(rays, dim):
    return len(rays) == dim and rank(list(rays)) == dim if rays else dim == 0


def is_simple(rays, dim):
    return is_simplicial(rays, dim) and lattice_index(list(rays)) == 1


def _span_complement(vectors, m):
    """Rows spanning the orthogonal complement of span(vectors)."""
    if not vectors:
        return [tuple(int(i == j) for j in range(m)) for i in range(m)]
    return nullspace([list(v) for v in vectors], m)


def facet_normal(facet_rays, all_rays, m):
    """Linear form vanishing on facet_rays, nonzero on span(all_rays), positive on the rest."""
    perp = _span_complement(all_rays, m)
    (n,) = nullspace([list(r) for r in facet_rays] + list(perp), m)
    for r in all_rays:
        v = dot(n, r)
        if v:
            return n if v > 0 else tuple(-x for x in n)
    raise GeometryError("facet spans the whole cone")


def triangulate(rays):
    """Placing triangulation of the cone over the given rays, in input order.

    Returns a list of simplicial cones, each a tuple of rays.  A ray that
    raises the dimension is coned with every simplex; otherwise it is
    joined to every boundary facet it sees.  Rays inside the current
    cone are skipped.
    """
    rays = [tuple(r) for r in rays]
    if not rays:
        return []
    m = len(rays[0])
    placed = [rays[0]]
    simplices = [(rays[0],)]
    cur_dim = 1
    for r in rays[1:]:
        if rank(placed + [r]) > cur_dim:
            simplices = [s + (r,) for s in simplices]
            cur_dim += 1
            placed.append(r)
            continue
        if cur_dim == 1:
            if dot(placed[0], r) < 0:
                raise NotPointedError("opposite rays in a one-dimensional cone")
            continue
        # boundary facets appear in exactly one simplex
        count = {}
        owner = {}
        for s in simplices:
            for i in range(len(s)):
                f = frozenset(s[:i] + s[i + 1:])
                count[f] = count.get(f, 0) + 1
                owner[f] = (s, s[i])
        new = []
        for f, c in count.items():
            if c != 1:
                continue
            s, opposite = owner[f]
            frays = [v for v in s if v != opposite]
            n = facet_normal(frays, list(s), m)
            if dot(n, r) < 0:
                new.append(tuple(frays) + (r,))
        if new:
            simplices.extend(new)
            placed.append(r)
    return simplices


def validate_complex(cx):
    """Report on the hypotheses the reciprocity and zeta computations need."""
    m = cx.dim
    report = {"dim": m, "bounding": len(cx.bounding), "internal": len(cx.internal)}
    try:
        rays = extreme_rays(cx)
        report["pointed"] = True
    except NotPointedError:
        report.update(pointed=False, full_dimensional=False, rays=None, simplicial=False, simple=False, facets=None,
                      bounding_equals_dim=len(cx.bounding) == m, redundant_bounding=[])
        return report
    cone_dim = rank(list(rays)) if rays else 0
    facets = []
    redundant = []
    for i, h in enumerate(cx.bounding):
        on = [r for r in rays if dot(h, r) == 0]
        if cone_dim == m and rank(on) == m - 1:
            facets.append(i)
        else:
            redundant.append(i)
    report.update(
        rays=[list(r) for r in rays],
        cone_dim=cone_dim,
        full_dimensional=cone_dim == m,
        bounding_equals_dim=len(cx.bounding) == m,
        facets=facets,
        redundant_bounding=redundant,
        simplicial=is_simplicial(rays, cone_dim),
        simple=is_simple(rays, cone_dim),
    )
    return report


def reciprocity_hypotheses(cx):
    """Problems preventing the reciprocity theorem from applying (empty list if none)."""
    rep = validate_complex(cx)
    problems = []
    if not rep["pointed"]:
        problems.append("cone is not pointed")
        return problems
    if not rep["full_dimensional"]:
        problems.append("cone has dimension %d < %d" % (rep["cone_dim"], cx.dim))
    if not rep["bounding_equals_dim"]:
        problems.append("%d bounding hyperplanes, need exactly %d" % (len(cx.bounding), cx.dim))
    if not rep["simplicial"]:
        problems.append("cone is not simplicial")
    return problems
