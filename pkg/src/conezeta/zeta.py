"""
Weyl-weighted zeta functions built from weight data.

A split reductive group with a representation is described by integer
coordinates of its weights, fundamental roots and the dominant weights of
the contragredient components in some basis of the character lattice.
From these we build the cone with its cell complex, assemble
Z = sum_w q^{-len(w)} E_{C_{I_w}}, and look for a functional equation
Z(1/q, 1/t) = (-1)^m q^a t^{-b} Z(q, t), i.e. (-1)^m q^{a + b s} Z.
"""
from dataclasses import dataclass, field
from itertools import combinations, product

from .algebra import (FactoredRational, LaurentPoly, MultiGenFun, invert_variables,
                      monomial_ratio_test, specialize_monomials, sum_rationals)
from .genfun import GenFunEngine, GenFunSpec, HypothesisError, PiecewiseWeight, check_positivity
from .geometry import CellComplex, NotPointedError, extreme_rays
from .linalg import column_hnf, det, dot, inverse, solve_combination, transpose
from .weyl import RootSystem, WeylGroup, descent_set


class WeightDataError(ValueError):
    pass


@dataclass
class WeightDatum:
    l: int
    d: int
    weights: list
    components: list
    contragredient_dominant: list
    fundamental_roots: list
    root_system: RootSystem = None
    det_rho: tuple = None
    alpha0: tuple = None

    def __post_init__(self):
        m = self.l + self.d
        self.weights = [tuple(int(x) for x in v) for v in self.weights]
        self.contragredient_dominant = [tuple(int(x) for x in v) for v in self.contragredient_dominant]
        self.fundamental_roots = [tuple(int(x) for x in v) for v in self.fundamental_roots]
        self.components = [tuple(int(i) for i in c) for c in self.components]
        for v in self.weights + self.contragredient_dominant + self.fundamental_roots:
            if len(v) != m:
                raise WeightDataError("vector %r does not have length l + d = %d" % (v, m))
        if len(self.fundamental_roots) != self.l:
            raise WeightDataError("expected %d fundamental roots" % self.l)
        if len(self.components) != len(self.contragredient_dominant):
            raise WeightDataError("one contragredient dominant weight per component")
        flat = sorted(i for c in self.components for i in c)
        if flat != list(range(len(self.weights))):
            raise WeightDataError("components must partition the weight indices")
        if self.l and self.root_system is None:
            raise WeightDataError("a root system is required when l > 0")
        if self.root_system is not None and self.root_system.rank != self.l:
            raise WeightDataError("root system rank %d != l = %d" % (self.root_system.rank, self.l))
        det_rho = tuple(sum(col) for col in zip(*self.weights)) if self.weights else (0,) * m
        if self.det_rho is not None and tuple(self.det_rho) != det_rho:
            raise WeightDataError("det_rho %r is not the sum of the weights %r" % (tuple(self.det_rho), det_rho))
        self.det_rho = det_rho
        alpha0 = self._alpha0()
        if self.alpha0 is not None and tuple(self.alpha0) != alpha0:
            raise WeightDataError("alpha0 %r does not match the positive roots %r" % (tuple(self.alpha0), alpha0))
        self.alpha0 = alpha0

    @property
    def m(self):
        return self.l + self.d

    @property
    def n(self):
        return len(self.weights)

    @property
    def r(self):
        return len(self.components)

    def _alpha0(self):
        """Sum of the positive roots, expressed through the fundamental roots' coordinates."""
        m = self.m
        if not self.l:
            return (0,) * m
        rs = self.root_system
        total = [0] * self.l
        for a in rs.positive_roots:
            for k, c in enumerate(rs.simple_coefficients(a)):
                total[k] += c
        return tuple(sum(total[k] * self.fundamental_roots[k][i] for k in range(self.l)) for i in range(m))

    def validate(self):
        """Check the weight decomposition and that the weights generate the lattice."""
        problems = []
        for ci, comp in enumerate(self.components):
            omega = self.contragredient_dominant[ci]
            for k in comp:
                shifted = tuple(a + b for a, b in zip(self.weights[k], omega))
                if not self.l:
                    if any(shifted):
                        problems.append("weight %d is not -omega_%d" % (k + 1, ci + 1))
                    continue
                c = solve_combination(self.fundamental_roots, shifted)
                if c is None or any(x.denominator != 1 or x < 0 for x in c):
                    problems.append("weight %d is not -omega_%d plus a non-negative integer "
                                    "combination of fundamental roots" % (k + 1, ci + 1))
        if not generates_lattice(self.weights, self.m):
            problems.append("weights do not generate Z^%d" % self.m)
        return problems


def generates_lattice(vectors, m):
    if not vectors:
        return m == 0
    H, _ = column_hnf(transpose([list(v) for v in vectors]))
    pivots = []
    for j in range(len(vectors)):
        col = [H[i][j] for i in range(m)]
        nz = [x for x in col if x]
        if nz:
            pivots.append(next(x for x in col if x))
    if len(pivots) < m:
        return False
    prod_ = 1
    for p in pivots:
        prod_ *= p
    return abs(prod_) == 1


@dataclass
class ZetaProblem:
    complex: CellComplex
    spec: GenFunSpec
    root_system: RootSystem = None
    l: int = 0
    d: int = 0
    n: int = 0
    notes: list = field(default_factory=list)

    @property
    def m(self):
        return self.complex.dim


def build_complex_from_weights(wd, gamma=None):
    """Cone and cell complex of a weight datum.

    Bounding hyperplanes: the fundamental roots, then the inverted
    contragredient dominant weights (dropping repeats).  Internal
    hyperplanes: pairwise weight differences (dropping zeros and repeats).
    """
    problems = wd.validate()
    if problems:
        raise WeightDataError("; ".join(problems))
    m = wd.m
    notes = []
    bounding = []
    for i, a in enumerate(wd.fundamental_roots):
        if not any(a):
            raise WeightDataError("fundamental root %d is zero" % (i + 1))
        bounding.append(_prim(a))
    for j, om in enumerate(wd.contragredient_dominant):
        v = tuple(-x for x in om)
        if not any(v):
            raise WeightDataError("contragredient dominant weight %d is zero" % (j + 1))
        v = _prim(v)
        if v in bounding:
            notes.append("bounding hyperplane of omega_%d duplicates bounding %d; dropped"
                         % (j + 1, bounding.index(v) + 1))
            continue
        bounding.append(v)
    internal = []
    for i, j in combinations(range(wd.n), 2):
        diff = tuple(a - b for a, b in zip(wd.weights[i], wd.weights[j]))
        if not any(diff):
            continue
        v = _prim(diff)
        neg = tuple(-x for x in v)
        if v in internal or neg in internal:
            notes.append("H_%d%d repeats an earlier internal hyperplane; dropped" % (i + 1, j + 1))
            continue
        for b, h in enumerate(bounding):
            if h in (v, neg):
                notes.append("H_%d%d coincides with bounding %d" % (i + 1, j + 1, b + 1))
        internal.append(v)
    cx = CellComplex(m, tuple(bounding), tuple(internal))
    spec = GenFunSpec(wd.alpha0, wd.det_rho, gamma or PiecewiseWeight.zero(m))
    try:
        check_positivity(cx, spec)
    except NotPointedError:
        raise HypothesisError("cone is not pointed") from None
    return ZetaProblem(cx, spec, wd.root_system, wd.l, wd.d, wd.n, notes)


def _prim(v):
    from math import gcd
    from functools import reduce
    g = reduce(gcd, v, 0)
    return tuple(x // g for x in v)


@dataclass
class DualBasis:
    matrix: list        # rows: old coordinates of alpha_1..alpha_l, omega_1^{-1}..omega_d^{-1}
    datum: WeightDatum  # the same data in the new coordinates
    a0: tuple


def _to_new(Pinv_T, v):
    return tuple(int(x) for x in (sum(row[i] * v[i] for i in range(len(v))) for row in Pinv_T))


def choose_dual_basis(wd):
    """Rewrite the data in the basis (alpha_1..alpha_l, omega_1^{-1}..omega_d^{-1}).

    Needs r = d and a unimodular change of basis; afterwards the cone is
    the positive orthant and a0 = (0,..,0,1,..,1).
    """
    if wd.r != wd.d:
        raise HypothesisError("dual basis needs r = d (got r = %d, d = %d)" % (wd.r, wd.d))
    P = [list(a) for a in wd.fundamental_roots] + [[-x for x in om] for om in wd.contragredient_dominant]
    D = det(P)
    if abs(D) != 1:
        raise HypothesisError("basis change has determinant %d, not unimodular" % D)
    Pinv_T = transpose(inverse(P))
    conv = lambda v: _to_new(Pinv_T, v)
    new = WeightDatum(
        wd.l, wd.d,
        weights=[conv(v) for v in wd.weights],
        components=[list(c) for c in wd.components],
        contragredient_dominant=[conv(v) for v in wd.contragredient_dominant],
        fundamental_roots=[conv(v) for v in wd.fundamental_roots],
        root_system=wd.root_system,
    )
    m = wd.m
    ident = [tuple(int(i == j) for j in range(m)) for i in range(m)]
    if [tuple(v) for v in new.fundamental_roots] + [tuple(-x for x in v) for v in new.contragredient_dominant] != ident:
        raise AssertionError("basis change did not produce the standard basis")
    a0 = (0,) * wd.l + (1,) * wd.d
    return DualBasis(P, new, a0)


def transform_gamma(gamma, P):
    """Carry weight vectors (pairing with cone points) into the dual-basis coordinates."""
    if gamma is None or gamma.assignment is None:
        return gamma
    Pinv_T = transpose(inverse(P))
    return PiecewiseWeight(gamma.m, {k: _to_new(Pinv_T, v) for k, v in gamma.assignment.items()})


def weyl_polynomials(rs, l):
    """{I (0-based tuple): sum over w with I_w = I of q^{-len(w)}}."""
    if not l:
        return {(): LaurentPoly.one()}
    polys = {}
    for w in WeylGroup(rs):
        I = tuple(sorted(i - 1 for i in descent_set(rs, w)))
        polys[I] = polys.get(I, LaurentPoly()) + LaurentPoly.monomial(-w.length, 0)
    return polys


def weighted_zeta(zp, engine=None):
    """Z = sum over w of q^{-len(w)} E_{C_{I_w}}."""
    engine = engine or GenFunEngine(zp.complex, zp.spec)
    terms = []
    for I, poly in sorted(weyl_polynomials(zp.root_system, zp.l).items()):
        terms.append(engine.region(I) * FactoredRational(poly))
    return sum_rationals(terms)


@dataclass(frozen=True)
class FneqCertificate:
    """Z(1/q, 1/t) = sign * q^(a + b s) * Z; sign_exponent is the parity of m in (-1)^m."""
    sign: int
    a: int
    b: int

    @property
    def sign_exponent(self):
        return 0 if self.sign == 1 else 1

    def as_dict(self):
        return {"sign": self.sign, "a": self.a, "b": self.b}


def fneq_detect(Z):
    if Z.is_zero():
        raise ValueError("functional equation of the zero function is undefined")
    found = monomial_ratio_test(invert_variables(Z), Z)
    if found is None:
        return None
    sign, a, bt = found
    return FneqCertificate(sign, a, -bt)


def in_region(cx, I, e):
    """e lies in C_I (I: 0-based bounding indices that must be strict)."""
    for i, h in enumerate(cx.bounding):
        v = dot(h, e)
        if v < 0 or (v == 0 and i in I):
            return False
    return True


def check_translation(zp, a0, box=6):
    """Compare C_{[m]-I} with a0 + C_{[l]-I} on the lattice box [0, box]^m, for every I in [l].

    Returns the list of I (1-based) where they differ.
    """
    cx = zp.complex
    l = zp.l
    nb = len(cx.bounding)
    pts = list(product(range(box + 1), repeat=cx.dim))
    failing = []
    for k in range(l + 1):
        for I in combinations(range(l), k):
            left = set(i for i in range(nb) if i not in I)
            right = set(i for i in range(l) if i not in I)
            for e in pts:
                shifted = tuple(x - y for x, y in zip(e, a0))
                if in_region(cx, left, e) != in_region(cx, right, shifted):
                    failing.append([i + 1 for i in I])
                    break
    return failing


def verify_main_theorem(zp, wd, box=6):
    """Check the hypotheses and the predicted functional equation for an r = d datum.

    zp carries gamma (in the original coordinates); everything else is
    rebuilt in the dual basis.
    """
    report = {"checks": {}, "passed": False}
    checks = report["checks"]
    dual = choose_dual_basis(wd)
    checks["unimodular_basis"] = True
    gamma = transform_gamma(zp.spec.gamma, dual.matrix) if zp is not None else None
    dz = build_complex_from_weights(dual.datum, gamma)
    a0 = dual.a0
    report["a0"] = list(a0)
    cx = dz.complex
    checks["a0_in_cone_and_walls"] = cx.contains(a0) and all(dot(h, a0) == 0 for h in cx.internal)
    failing = check_translation(dz, a0, box)
    checks["translation"] = not failing
    if failing:
        report["translation_failures"] = failing
    checks["alpha0_dot_a0_zero"] = dot(dz.spec.A, a0) == 0
    checks["det_dot_a0_equals_n"] = dot(dz.spec.B, a0) == wd.n
    engine = GenFunEngine(cx, dz.spec)
    cell = next(c for c in engine.cells if c.signs == cx.signs_of(a0))
    c = dot(dz.spec.gamma(cell), a0)
    npos = len(wd.root_system.positive_roots) if wd.root_system else 0
    expected = FneqCertificate((-1) ** wd.m, npos + c, -wd.n)
    Z = weighted_zeta(dz, engine)
    cert = fneq_detect(Z)
    checks["certificate_matches"] = cert == expected
    report.update(
        c=c,
        expected=expected.as_dict(),
        certificate=None if cert is None else cert.as_dict(),
        zeta=Z,
    )
    report["passed"] = all(checks.values())
    return report


def torus_example(d, k):
    """The split torus T_d with weights x_1..x_d, x_i^k / x_d (i < d), as a cone problem.

    No roots; A = 0 and B = (k+1, ..., k+1, -(d-2)).
    """
    if d < 2 or k < 3:
        raise ValueError("torus example needs d >= 2 and k >= 3")
    e = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    bounding = e + [tuple(k * int(j == i) - int(j == d - 1) for j in range(d)) for i in range(d - 1)]
    cx = CellComplex(d, tuple(bounding))
    B = (k + 1,) * (d - 1) + (-(d - 2),)
    spec = GenFunSpec((0,) * d, B)
    check_positivity(cx, spec)
    return ZetaProblem(cx, spec, None, 0, d, 2 * d - 1)


def torus_weight_datum(d, k):
    """The same torus representation as raw weight data (r = 2d - 1 one-dimensional components)."""
    if d < 2 or k < 3:
        raise ValueError("torus example needs d >= 2 and k >= 3")
    e = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    weights = e + [tuple(k * int(j == i) - int(j == d - 1) for j in range(d)) for i in range(d - 1)]
    return WeightDatum(0, d, weights, [[i] for i in range(len(weights))],
                       [tuple(-x for x in w) for w in weights], [])


def torus_closed_form(d, k):
    """(1 + X_1..X_d (1 + X_d + .. + X_d^{k-2})) / ((1-X_1)..(1-X_{d-1})(1 - X_1..X_{d-1} X_d^k)).

    Returns (formal MultiGenFun, its specialization to (q, t)).
    """
    if d < 2 or k < 3:
        raise ValueError("torus example needs d >= 2 and k >= 3")
    num = {(0,) * d: 1}
    for j in range(k - 1):
        num[(1,) * (d - 1) + (1 + j,)] = 1
    den = [tuple(int(i == j) for j in range(d)) for i in range(d - 1)]
    den.append((1,) * (d - 1) + (k,))
    g = MultiGenFun(num, den)
    zp = torus_example(d, k)
    return g, specialize_monomials(g, zp.spec.A, zp.spec.B)


def cone_rays_of(zp):
    return extreme_rays(zp.complex)
