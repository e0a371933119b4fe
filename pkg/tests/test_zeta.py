import pytest

from conezeta.algebra import FactoredRational, LaurentPoly, eq_rational
from conezeta.genfun import HypothesisError
from conezeta.geometry import extreme_rays
from conezeta.weyl import build_root_system
from conezeta.zeta import (FneqCertificate, WeightDataError, WeightDatum, build_complex_from_weights,
                           choose_dual_basis, fneq_detect, torus_closed_form, torus_example,
                           torus_weight_datum, verify_main_theorem, weighted_zeta)
from conftest import fr


def gl(n):
    """Natural representation of GL_n in the basis (alpha_1..alpha_{n-1}, last diagonal character)."""
    l = n - 1
    weights = [tuple(int(i >= j) for i in range(l)) + (1,) for j in range(n)]
    roots = [tuple(int(i == j) for i in range(n)) for j in range(l)]
    return WeightDatum(l, 1, weights, [list(range(n))], [(0,) * l + (-1,)], roots,
                       build_root_system("A", l) if l else None)


def classical(n):
    return FactoredRational(LaurentPoly.one(), [(k, 1) for k in range(n)])


def test_gl2_complex():
    wd = gl(2)
    assert wd.weights == [(1, 1), (0, 1)]
    zp = build_complex_from_weights(wd)
    assert zp.complex.bounding == ((1, 0), (0, 1))
    assert zp.complex.internal == ((1, 0),)
    assert zp.spec.A == (1, 0) and zp.spec.B == (1, 2)
    assert any("coincides with bounding 1" in n for n in zp.notes)


def test_trivial_torus():
    wd = WeightDatum(0, 1, [(1,)], [[0]], [(-1,)], [])
    zp = build_complex_from_weights(wd)
    assert zp.complex.bounding == ((1,),) and zp.spec.A == (0,) and zp.spec.B == (1,)
    assert eq_rational(weighted_zeta(zp), fr([(1, 0, 0)], [(0, 1)]))


def test_weights_must_decompose():
    wd = WeightDatum(1, 1, [(2, 1), (0, 1)], [[0, 1]], [(0, -1)], [(1, 0)], build_root_system("A", 1))
    with pytest.raises(WeightDataError):
        build_complex_from_weights(wd)
    # weights spanning an index-2 sublattice
    sub = WeightDatum(0, 2, [(1, 0), (0, 2)], [[0], [1]], [(-1, 0), (0, -2)], [])
    assert sub.validate() == ["weights do not generate Z^2"]
    with pytest.raises(WeightDataError):
        build_complex_from_weights(sub)


def test_dual_basis():
    assert choose_dual_basis(gl(2)).a0 == (0, 1)
    assert choose_dual_basis(gl(3)).a0 == (0, 0, 1)
    with pytest.raises(HypothesisError):
        choose_dual_basis(torus_weight_datum(2, 3))


@pytest.mark.parametrize("n", [2, 3])
def test_gl_zeta_is_classical_factor(n):
    Z = weighted_zeta(build_complex_from_weights(gl(n)))
    assert eq_rational(Z, classical(n))


def test_gl2_zeta_form():
    Z = weighted_zeta(build_complex_from_weights(gl(2)))
    assert eq_rational(Z, fr([(1, 0, 0), (1, 0, 1)], [(1, 1), (0, 2)]))
    assert fneq_detect(Z) == FneqCertificate(1, 1, -2)


@pytest.mark.parametrize("n,cert", [(2, (1, 1, -2)), (3, (-1, 3, -3))])
def test_verify_gl(n, cert):
    wd = gl(n)
    rep = verify_main_theorem(build_complex_from_weights(wd), wd)
    assert rep["passed"], rep["checks"]
    assert rep["c"] == 0
    assert (rep["certificate"]["sign"], rep["certificate"]["a"], rep["certificate"]["b"]) == cert


def test_fneq_trivial():
    assert fneq_detect(FactoredRational.one()) == FneqCertificate(1, 0, 0)
    with pytest.raises(ValueError):
        fneq_detect(FactoredRational.zero())


def test_torus_example_shape():
    zp = torus_example(2, 3)
    assert zp.complex.bounding == ((1, 0), (0, 1), (3, -1))
    assert sorted(extreme_rays(zp.complex)) == [(1, 0), (1, 3)]
    assert zp.spec.B == (4, 0)
    assert sorted(extreme_rays(torus_example(3, 3).complex)) == [(0, 1, 0), (1, 0, 0), (1, 1, 3)]
    with pytest.raises(ValueError):
        torus_example(2, 2)


def test_torus_closed_form_instances():
    g, _ = torus_closed_form(2, 3)
    assert g.numerator == {(0, 0): 1, (1, 1): 1, (1, 2): 1}
    assert sorted(g.denominator) == [(1, 0), (1, 3)]
    g, _ = torus_closed_form(2, 4)
    assert g.numerator == {(0, 0): 1, (1, 1): 1, (1, 2): 1, (1, 3): 1}
    g, _ = torus_closed_form(3, 3)
    assert g.numerator == {(0, 0, 0): 1, (1, 1, 1): 1, (1, 1, 2): 1}
    assert sorted(g.denominator) == [(0, 1, 0), (1, 0, 0), (1, 1, 3)]


def test_torus_specialization_is_closed_form():
    Z = weighted_zeta(torus_example(2, 3))
    assert eq_rational(Z, fr([(1, 0, 0), (2, 0, 4)], [(0, 4), (0, 4)]))
    assert fneq_detect(Z) is None
