import pytest

from conezeta.genfun import GenFunSpec
from conezeta.geometry import CellComplex
from conezeta.oracle import ExpansionError, TruncatedSeries, compare, lattice_sum_truncated, series_expand
from conezeta.zeta import torus_closed_form, torus_example
from conftest import fr

LINE = CellComplex(1, ((1,),))


def geometric(n):
    return TruncatedSeries(n, {j: {0: 1} for j in range(n + 1)})


def test_line_sum():
    s = lattice_sum_truncated(LINE, (), GenFunSpec((0,), (1,)), 3)
    assert compare(s, geometric(3))["equal"]


def test_torus_hand_count():
    # B = (4, 0): 4 e_1 <= 4 leaves the origin and (1, 0), (1, 1), (1, 2), (1, 3)
    zp = torus_example(2, 3)
    s = lattice_sum_truncated(zp.complex, (), zp.spec, 4)
    assert s.to_json() == [{"t": 0, "coeff": [[1, 1, 0]]}, {"t": 4, "coeff": [[4, 1, 0]]}]
    _, closed = torus_closed_form(2, 3)
    assert compare(series_expand(closed, 12), lattice_sum_truncated(zp.complex, (), zp.spec, 12))["equal"]


def test_gl2_sum():
    cx = CellComplex(2, ((1, 0), (0, 1)), ((1, 0),))
    s = lattice_sum_truncated(cx, (), GenFunSpec((1, 0), (1, 1)), 5)
    for j in range(6):
        assert s.coeff(j) == {i: 1 for i in range(j + 1)}
    assert compare(s, series_expand(fr([(1, 0, 0)], [(0, 1), (1, 1)]), 5))["equal"]


def test_series_examples():
    assert compare(series_expand(fr([(1, 0, 0)], [(0, 1)]), 3), geometric(3))["equal"]
    s = series_expand(fr([(1, 0, 0)], [(0, 1), (1, 1)]), 2)
    assert s.coeffs == {0: {0: 1}, 1: {0: 1, 1: 1}, 2: {0: 1, 1: 1, 2: 1}}
    s = series_expand(fr([(1, 0, 0), (1, 0, 1)], [(0, 2)]), 4)
    assert compare(s, geometric(4))["equal"]


def test_series_rejects_t_free_factor():
    with pytest.raises(ExpansionError):
        series_expand(fr([(1, 0, 0)], [(1, 0)]), 3)


def test_compare_reports():
    a = TruncatedSeries(3, {0: {0: 1}, 2: {1: 2}})
    b = TruncatedSeries(3, {0: {0: 1}, 2: {1: 3}})
    assert compare(a, a)["equal"]
    v = compare(a, b)
    assert not v["equal"] and v["degree"] == 2 and v["left"] == [[2, 1, 1]] and v["right"] == [[3, 1, 1]]
    assert compare(TruncatedSeries(2, {}), TruncatedSeries(2, {}))["equal"]
    with pytest.raises(ValueError):
        compare(a, TruncatedSeries(4, {}))


def test_infinite_sum_refused():
    with pytest.raises(ValueError):
        lattice_sum_truncated(LINE, (), GenFunSpec((0,), (0,)), 3)
