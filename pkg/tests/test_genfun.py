import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conezeta.algebra import FactoredRational, eq_rational, invert_variables, sum_rationals
from conezeta.corpus import random_instance
from conezeta.genfun import (GenFunEngine, GenFunSpec, HypothesisError, PiecewiseWeight, check_reciprocity,
                             euler_expected, euler_sum, genfun_halfopen_simplicial, genfun_region,
                             parallelepiped_points, validate_weight)
from conezeta.geometry import CellComplex, enumerate_cells
from conezeta.oracle import compare, lattice_sum_truncated, series_expand
from conftest import fr

LINE = CellComplex(1, ((1,),))
DIAG = CellComplex(2, ((1, 0), (0, 1)), ((1, -1),))
STD = CellComplex(2, ((1, 0), (0, 1)))
TORUS = CellComplex(2, ((1, 0), (0, 1), (3, -1)))
TORUS_FACETS = CellComplex(2, ((0, 1), (3, -1)))


def labels(cx):
    return {c.label(): c for c in enumerate_cells(cx)}


def test_validate_weight_examples():
    assert validate_weight(LINE, PiecewiseWeight.zero(1))["valid"]
    c = labels(LINE)
    g = PiecewiseWeight(1, {c["0"].signs: (5,), c["+"].signs: (2,)})
    assert validate_weight(LINE, g)["valid"]
    c = labels(DIAG)
    base = {s.signs: (1, 0) for s in c.values()}
    base[c["++|+"].signs] = (0, 1)
    base[c["+0|+"].signs] = (0, 1)
    assert validate_weight(DIAG, PiecewiseWeight(2, base))["valid"]
    base[c["++|0"].signs] = (0, 0)
    rep = validate_weight(DIAG, PiecewiseWeight(2, base))
    assert not rep["valid"] and rep["violations"]


def test_missing_weight_is_reported():
    c = labels(LINE)
    rep = validate_weight(LINE, PiecewiseWeight(1, {c["+"].signs: (1,)}))
    assert rep["undefined"] == ["0"]


def test_halfopen_simplicial_examples():
    assert genfun_halfopen_simplicial([(1,)], (), (0,), (1,)) == fr([(1, 0, 0)], [(0, 1)])
    assert genfun_halfopen_simplicial([(1,)], (0,), (0,), (1,)) == fr([(1, 0, 1)], [(0, 1)])
    assert parallelepiped_points([(1, 0), (1, 3)]) == [(0, 0), (1, 1), (1, 2)]
    x = genfun_halfopen_simplicial([(1, 0), (1, 3)], (), (0, 0), (1, 1))
    assert x == fr([(1, 0, 0), (1, 0, 2), (1, 0, 3)], [(0, 1), (0, 4)])


def test_parallelepiped_in_lower_dimension():
    # generators spanning a plane in R^3 whose lattice index is 2
    pts = parallelepiped_points([(1, 1, 0), (1, -1, 0)])
    assert pts == [(0, 0, 0), (1, 0, 0)]
    assert parallelepiped_points([(2, 0, 2)], (0,)) == [(1, 0, 1), (2, 0, 2)]


def test_cell_examples():
    spec = GenFunSpec((0,), (1,))
    eng = GenFunEngine(LINE, spec)
    c = labels(LINE)
    assert eng.cell(c["0"]) == FactoredRational.one()
    assert eq_rational(eng.cell(c["+"]), fr([(1, 0, 1)], [(0, 1)]))
    assert eq_rational(genfun_region(LINE, (), spec), fr([(1, 0, 0)], [(0, 1)]))


def test_standard_interior():
    x = genfun_region(STD, (0, 1), GenFunSpec((0, 0), (1, 1)))
    assert eq_rational(x, fr([(1, 0, 2)], [(0, 1), (0, 1)]))


def test_torus_sector_matches_oracle():
    spec = GenFunSpec((0, 0), (1, 1))
    eng = GenFunEngine(TORUS, spec)
    sector = next(c for c in eng.cells if c.dim == 2)
    assert eq_rational(eng.cell(sector), eng.open_cell(sector))
    assert eq_rational(eng.closure(sector), fr([(1, 0, 0), (1, 0, 2), (1, 0, 3)], [(0, 1), (0, 4)]))
    left = series_expand(eng.region((0, 1, 2)), 12)
    right = lattice_sum_truncated(TORUS, (0, 1, 2), spec, 12)
    assert compare(left, right)["equal"]


def test_reciprocity_examples():
    spec = GenFunSpec((0,), (1,))
    v = check_reciprocity(LINE, (), spec)
    assert v.holds and eq_rational(v.lhs, fr([(-1, 0, 1)], [(0, 1)]))
    for k in range(3):
        for I in combinations(range(2), k):
            assert check_reciprocity(STD, I, GenFunSpec((0, 0), (1, 1))).holds
            assert check_reciprocity(TORUS_FACETS, I, GenFunSpec((0, 0), (1, 1))).holds


def test_reciprocity_hypotheses_enforced():
    with pytest.raises(HypothesisError):
        check_reciprocity(TORUS, (), GenFunSpec((0, 0), (1, 1)))
    with pytest.raises(HypothesisError):
        GenFunEngine(LINE, GenFunSpec((0,), (-1,)))


def test_euler_examples():
    cells = enumerate_cells(LINE)
    origin = cells[0]
    assert euler_sum(cells, origin, ()) == 0
    assert euler_sum(cells, origin, (0,)) == -1
    c = labels(DIAG)
    assert euler_sum(list(c.values()), c["++|0"], ()) == 1


def test_non_simplicial_cone_against_oracle():
    # square pyramid: four rays, two triangles, half-open and interior tilings
    cx = CellComplex(3, ((-1, -1, 1), (1, -1, 1), (1, 1, 1), (-1, 1, 1)), ((1, 0, 0),))
    spec = GenFunSpec((1, 0, -1), (0, 0, 1))
    eng = GenFunEngine(cx, spec)
    for c in eng.cells:
        assert eq_rational(eng.cell(c), eng.open_cell(c))
    for I in [(), (0, 2), (0, 1, 2, 3)]:
        left = series_expand(eng.region(I), 8)
        assert compare(left, lattice_sum_truncated(cx, I, spec, 8))["equal"]


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3), st.integers(0, 3))
def test_engine_properties(seed, m, k):
    cx, spec = random_instance(random.Random(seed), m, k)
    eng = GenFunEngine(cx, spec)
    assert validate_weight(cx, spec.gamma, eng.cells)["valid"]
    # the subtraction recursion and the interior tiling agree cell by cell
    for c in eng.cells:
        assert eq_rational(eng.cell(c), eng.open_cell(c))
    # partition: the whole cone is the sum of its cells
    assert eq_rational(eng.region(()), sum_rationals([eng.cell(c) for c in eng.cells]))
    for I in [(), tuple(range(m))]:
        assert check_reciprocity(cx, I, spec, eng).holds
    for f0 in eng.cells:
        for I in [(), (0,), tuple(range(m))]:
            assert euler_sum(eng.cells, f0, I) == euler_expected(eng.cells, f0, I, m)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 3), st.integers(1, 3))
def test_constant_weight_on_closure(seed, m, k):
    # freezing gamma to C_F on the closure of F leaves the faces of F unchanged
    cx, spec = random_instance(random.Random(seed), m, k)
    eng = GenFunEngine(cx, spec)
    top = max(eng.cells, key=lambda c: c.dim)
    frozen = {c.signs: spec.gamma(top) for c in eng.cells}
    eng2 = GenFunEngine(cx, GenFunSpec(spec.A, spec.B, PiecewiseWeight(m, frozen)))
    for f in eng.faces(top):
        assert eq_rational(eng.cell(f), eng2.cell(f))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_inversion_involution(seed):
    from conezeta.corpus import random_generators
    gens, C, B = random_generators(random.Random(seed))
    k = len(gens)
    closed = genfun_halfopen_simplicial(gens, (), C, B)
    opened = genfun_halfopen_simplicial(gens, tuple(range(k)), C, B)
    assert eq_rational(invert_variables(closed), opened * (-1) ** k)
