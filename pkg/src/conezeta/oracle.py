"""
Brute-force checks: truncated lattice sums and t-series expansion.

Neither function looks at triangulations or parallelepipeds; the lattice
sum walks a box of integer points and classifies each one by evaluating
signs, the expansion multiplies out geometric series.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

import numpy as np

from .geometry import extreme_rays
from .linalg import dot


class ExpansionError(ValueError):
    pass


@dataclass
class TruncatedSeries:
    """Coefficients {t-degree: {q-exponent: coeff}} up to t-degree ``order``."""
    order: int
    coeffs: dict

    def __post_init__(self):
        clean = {}
        for j, poly in self.coeffs.items():
            if j > self.order:
                continue
            p = {i: Fraction(c) for i, c in poly.items() if c}
            if p:
                clean[j] = p
        self.coeffs = clean

    def coeff(self, j):
        return dict(self.coeffs.get(j, {}))

    def to_json(self):
        out = []
        for j in sorted(self.coeffs):
            poly = self.coeffs[j]
            out.append({"t": j, "coeff": [[c.numerator, c.denominator, i] for i, c in sorted(poly.items())]})
        return out


def _box_bounds(rays, B, N):
    lo, hi = [], []
    m = len(B)
    for j in range(m):
        ratios = [Fraction(u[j], dot(B, u)) for u in rays]
        lo.append(floor(N * min([Fraction(0)] + ratios)))
        hi.append(ceil(N * max([Fraction(0)] + ratios)))
    return lo, hi


def _points_up_to(cx, B, N):
    """Integer points e of the cone with B.e <= N, as an (k, m) array."""
    rays = extreme_rays(cx)
    for u in rays:
        if dot(B, u) <= 0:
            raise ValueError("B.u <= 0 on ray %r; the truncated sum is infinite" % (u,))
    m = cx.dim
    if not rays:
        return np.zeros((1, m), dtype=np.int64)
    lo, hi = _box_bounds(rays, B, N)
    axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo, hi)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, m)
    keep = grid @ np.asarray(B, dtype=np.int64) <= N
    for h in cx.bounding:
        keep &= grid @ np.asarray(h, dtype=np.int64) >= 0
    return grid[keep]


def lattice_sum_cells(cx, spec, N):
    """Per-cell truncated sums {sign vector: TruncatedSeries}, computed in one sweep."""
    pts = _points_up_to(cx, spec.B, N)
    out = {}
    for e in pts:
        e = tuple(int(x) for x in e)
        signs = cx.signs_of(e)
        C = [a + c for a, c in zip(spec.A, spec.gamma(signs))]
        i, j = dot(C, e), dot(spec.B, e)
        poly = out.setdefault(signs, {}).setdefault(j, {})
        poly[i] = poly.get(i, 0) + 1
    return {k: TruncatedSeries(N, v) for k, v in out.items()}


def lattice_sum_truncated(cx, I, spec, N, cell_sums=None):
    """Sum of q^{(A+C_{F_e}).e} t^{B.e} over lattice points e of C_I with B.e <= N."""
    cell_sums = lattice_sum_cells(cx, spec, N) if cell_sums is None else cell_sums
    I = set(I)
    total = {}
    for (bsigns, isigns), series in cell_sums.items():
        if not all(bsigns[i] for i in I):
            continue
        for j, poly in series.coeffs.items():
            acc = total.setdefault(j, {})
            for i, c in poly.items():
                acc[i] = acc.get(i, 0) + c
    return TruncatedSeries(N, total)


def series_expand(x, N):
    """t-expansion of a FactoredRational up to degree N.

    Each factor 1/(1 - q^a t^b) needs b >= 1.
    """
    for a, b in x.den:
        if b <= 0:
            raise ExpansionError("factor (1 - q^%d t^%d) has no expansion in t" % (a, b))
    terms = {}
    for (i, j), c in x.num.items():
        terms[i, j] = c
    low = min([0] + [j for (_, j) in terms])
    cap = N - low
    for a, b in x.den:
        new = {}
        for (i, j), c in terms.items():
            k = 0
            while j + k * b <= N and k * b <= cap:
                key = (i + k * a, j + k * b)
                new[key] = new.get(key, 0) + c
                k += 1
        terms = {k: v for k, v in new.items() if v}
    coeffs = {}
    for (i, j), c in terms.items():
        if j <= N:
            coeffs.setdefault(j, {})[i] = coeffs.get(j, {}).get(i, 0) + c
    return TruncatedSeries(N, coeffs)


def compare(a, b):
    """Exact coefficientwise comparison; reports the first mismatching t-degree."""
    if a.order != b.order:
        raise ValueError("series orders differ: %d vs %d" % (a.order, b.order))
    degrees = sorted(set(a.coeffs) | set(b.coeffs))
    for j in degrees:
        ca, cb = a.coeff(j), b.coeff(j)
        if ca != cb:
            return {"equal": False, "degree": j, "left": _poly_json(ca), "right": _poly_json(cb)}
    return {"equal": True, "degree": None}


def _poly_json(p):
    return [[Fraction(c).numerator, Fraction(c).denominator, i] for i, c in sorted(p.items())]
