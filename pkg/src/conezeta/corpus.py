"""
Seeded random instances for property tests and the acceptance suite.
"""
import random

from .genfun import GenFunSpec, PiecewiseWeight
from .geometry import CellComplex, enumerate_cells
from .linalg import det, nullspace, rank, lattice_index, primitive


def _rand_vec(rng, m, lo, hi):
    return tuple(rng.randint(lo, hi) for _ in range(m))


def random_simplicial_complex(rng, m, n_internal, max_det=6):
    """Cone cut out by m random normals with 0 < |det| <= max_det, plus random internal hyperplanes."""
    while True:
        normals = [_rand_vec(rng, m, -2, 2) for _ in range(m)]
        if any(not any(v) for v in normals):
            continue
        normals = [primitive(v) for v in normals]
        if len(set(normals)) < m:
            continue
        D = det(normals)
        if D != 0 and abs(D) <= max_det:
            break
    internal = []
    tries = 0
    while len(internal) < n_internal and tries < 200:
        tries += 1
        v = _rand_vec(rng, m, -2, 2)
        if not any(v):
            continue
        v = primitive(v)
        neg = tuple(-x for x in v)
        if v in internal or neg in internal:
            continue
        internal.append(v)
    return CellComplex(m, tuple(normals), tuple(internal))


def random_weight(rng, cx, cells=None, bound=2, tries=200):
    """A compatible piecewise weight with entries in [-bound, bound].

    C_F = g + sum over hyperplanes of k_H(sign of F on H) * normal_H, plus a
    random vector orthogonal to span(F).  Any pair F' <= F then differs by
    normals of hyperplanes containing F' and vectors orthogonal to F'.
    """
    m = cx.dim
    cells = enumerate_cells(cx) if cells is None else cells
    normals = cx.bounding + cx.internal
    for attempt in range(tries):
        # later attempts switch on fewer hyperplanes so the bound is easier to meet
        density = max(0.2, 1 - attempt / tries)
        g = _rand_vec(rng, m, -1, 1)
        kappa = [{s: rng.choice((-1, 1)) if rng.random() < density / 2 else 0 for s in (-1, 0, 1)}
                 for _ in normals]
        assignment = {}
        ok = True
        for c in cells:
            signs = c.bounding_signs + c.internal_signs
            v = list(g)
            for h, s, k in zip(normals, signs, kappa):
                for i in range(m):
                    v[i] += k[s] * h[i]
            perp = nullspace([list(r) for r in c.rays], m) if c.rays else [
                tuple(int(i == j) for j in range(m)) for i in range(m)]
            for p in perp:
                coef = rng.choice((-1, 0, 0, 1))
                for i in range(m):
                    v[i] += coef * p[i]
            if any(abs(x) > bound for x in v):
                ok = False
                break
            assignment[c.signs] = tuple(v)
        if ok:
            return PiecewiseWeight(m, assignment)
    g = _rand_vec(rng, m, -bound, bound)
    return PiecewiseWeight(m, {c.signs: g for c in cells})


def random_instance(rng, m, n_internal):
    """(complex, spec) with random A in [-2,2]^m and B a positive combination of the bounding normals."""
    cx = random_simplicial_complex(rng, m, n_internal)
    coeffs = [rng.randint(1, 2) for _ in range(m)]
    B = tuple(sum(c * h[i] for c, h in zip(coeffs, cx.bounding)) for i in range(m))
    A = _rand_vec(rng, m, -2, 2)
    gamma = random_weight(rng, cx)
    return cx, GenFunSpec(A, B, gamma)


def reciprocity_corpus(seed=20240601, size=24):
    """size instances over dimensions 1..3 with 0..3 internal hyperplanes."""
    rng = random.Random(seed)
    shapes = [(1, 0), (1, 1)] + [(2, k) for k in range(4)] + [(3, k) for k in range(4)]
    out = []
    for idx in range(size):
        m, k = shapes[idx % len(shapes)]
        out.append(random_instance(rng, m, k))
    return out


def random_generators(rng, max_dim=3, max_det=6):
    """(generators, C, B): k independent integer vectors in Z^m (k <= m <= max_dim) with B.u > 0."""
    while True:
        m = rng.randint(1, max_dim)
        k = rng.randint(1, m)
        gens = [_rand_vec(rng, m, -3, 3) for _ in range(k)]
        if rank(gens) < k:
            continue
        if lattice_index(gens) > max_det:
            continue
        for _ in range(100):
            B = _rand_vec(rng, m, -3, 3)
            if all(sum(b * x for b, x in zip(B, u)) > 0 for u in gens):
                break
        else:
            continue
        C = _rand_vec(rng, m, -2, 2)
        return gens, C, B
