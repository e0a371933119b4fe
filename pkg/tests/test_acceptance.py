"""
Acceptance suite: one check per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` or ``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time
from itertools import combinations

import pytest

from conezeta.algebra import eq_rational, invert_variables
from conezeta.corpus import random_generators, reciprocity_corpus
from conezeta.genfun import GenFunEngine, check_reciprocity, euler_expected, euler_sum, genfun_halfopen_simplicial
from conezeta.oracle import TruncatedSeries, compare, lattice_sum_cells, lattice_sum_truncated, series_expand
from conezeta.weyl import (WeylGroup, build_root_system, descent_set, length_generating_polynomial,
                           poincare_polynomial)
from conezeta.zeta import (FneqCertificate, WeightDatum, build_complex_from_weights, fneq_detect,
                           torus_closed_form, torus_example, verify_main_theorem, weighted_zeta,
                           weyl_polynomials)

ORDER = 12
CORPUS_SEED = 20240601


def subsets(n):
    return [I for k in range(n + 1) for I in combinations(range(n), k)]


_corpus = None


def corpus():
    global _corpus
    if _corpus is None:
        _corpus = reciprocity_corpus(CORPUS_SEED, 24)
    return _corpus


def gl_datum(n):
    l = n - 1
    weights = [tuple(int(i >= j) for i in range(l)) + (1,) for j in range(n)]
    roots = [tuple(int(i == j) for i in range(n)) for j in range(l)]
    return WeightDatum(l, 1, weights, [list(range(n))], [(0,) * l + (-1,)], roots, build_root_system("A", l))


def weyl_weighted_lattice_sum(zp, N):
    """Oracle for Z: sum over I of (sum_{I_w = I} q^-len(w)) times the brute-force sum over C_I."""
    sums = lattice_sum_cells(zp.complex, zp.spec, N)
    total = {}
    for I, poly in weyl_polynomials(zp.root_system, zp.l).items():
        s = lattice_sum_truncated(zp.complex, I, zp.spec, N, sums)
        for (a, _), c in poly.items():
            for j, coeffs in s.coeffs.items():
                acc = total.setdefault(j, {})
                for i, v in coeffs.items():
                    acc[i + a] = acc.get(i + a, 0) + c * v
    return TruncatedSeries(N, total)


def criterion_1():
    bad = []
    for d in (2, 3):
        for k in (3, 4, 5):
            Z = weighted_zeta(torus_example(d, k))
            _, closed = torus_closed_form(d, k)
            if not eq_rational(Z, closed) or fneq_detect(Z) is not None:
                bad.append((d, k))
    return not bad, "9 torus instances match the closed form, none has a functional equation" if not bad \
        else "failing (d, k): %s" % bad


def criterion_2():
    checked, failures = 0, []
    for n, (cx, spec) in enumerate(corpus()):
        eng = GenFunEngine(cx, spec)
        for I in subsets(cx.dim):
            checked += 1
            if not check_reciprocity(cx, I, spec, eng).holds:
                failures.append((n, I))
    return not failures, "%d complexes, %d regions" % (len(corpus()), checked) if not failures \
        else "failures: %s" % failures[:5]


def criterion_3():
    checked, failures = 0, []
    for n, (cx, spec) in enumerate(corpus()):
        eng = GenFunEngine(cx, spec)
        sums = lattice_sum_cells(cx, spec, ORDER)
        for I in subsets(cx.dim):
            checked += 1
            v = compare(series_expand(eng.region(I), ORDER), lattice_sum_truncated(cx, I, spec, ORDER, sums))
            if not v["equal"]:
                failures.append((n, I, v["degree"]))
    return not failures, "%d regions agree to t-degree %d" % (checked, ORDER) if not failures \
        else "failures (instance, I, degree): %s" % failures[:5]


def criterion_4():
    checked, failures = 0, []
    for n, (cx, spec) in enumerate(corpus()):
        eng = GenFunEngine(cx, spec)
        for f0 in eng.cells:
            for I in subsets(cx.dim):
                checked += 1
                if euler_sum(eng.cells, f0, I) != euler_expected(eng.cells, f0, I, cx.dim):
                    failures.append((n, f0.label(), I))
    return not failures, "%d (cell, I) pairs" % checked if not failures else "failures: %s" % failures[:5]


def criterion_5():
    expected = {2: FneqCertificate(1, 1, -2), 3: FneqCertificate(-1, 3, -3)}
    notes = []
    ok = True
    for n, cert in expected.items():
        wd = gl_datum(n)
        zp = build_complex_from_weights(wd)
        Z = weighted_zeta(zp)
        oracle_ok = compare(series_expand(Z, ORDER), weyl_weighted_lattice_sum(zp, ORDER))["equal"]
        rep = verify_main_theorem(zp, wd)
        found = fneq_detect(Z)
        good = oracle_ok and rep["passed"] and found == cert
        ok &= good
        notes.append("GL%d %s q^(%d%+ds)" % (n, "+" if found.sign > 0 else "-", found.a, found.b) if found
                     else "GL%d none" % n)
    return ok, ", ".join(notes)


def criterion_6():
    bad = []
    for t, l in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4)]:
        rs = build_root_system(t, l)
        g = WeylGroup(rs)
        w0 = g.longest()
        npos = len(rs.positive_roots)
        full = frozenset(range(1, l + 1))
        ok = all(w.length + g.product(w, w0).length == npos
                 and descent_set(rs, g.product(w, w0)) == full - descent_set(rs, w) for w in g)
        ok &= length_generating_polynomial(g) == poincare_polynomial(rs)
        if not ok:
            bad.append("%s%d" % (t, l))
    return not bad, "A1-A3, B2, B3, C3, D4" if not bad else "failing types: %s" % bad


def criterion_7():
    rng = random.Random(7)
    bad = 0
    for _ in range(50):
        gens, C, B = random_generators(rng)
        k = len(gens)
        closed = genfun_halfopen_simplicial(gens, (), C, B)
        opened = genfun_halfopen_simplicial(gens, tuple(range(k)), C, B)
        if not eq_rational(invert_variables(closed), opened * (-1) ** k):
            bad += 1
    return not bad, "50 generator sets" if not bad else "%d of 50 fail" % bad


CRITERIA = [
    (1, "torus closed forms and no functional equation", criterion_1, 5),
    (2, "reciprocity on the random corpus", criterion_2, 60),
    (3, "oracle equivalence to t-degree 12", criterion_3, None),
    (4, "Euler-sum identity", criterion_4, None),
    (5, "GL2/GL3 functional-equation exponents", criterion_5, 10),
    (6, "Weyl group identities and Poincare polynomials", criterion_6, 10),
    (7, "closed vs open parallelepiped inversion", criterion_7, None),
]


def run_one(number, title, func, limit):
    start = time.perf_counter()
    ok, detail = func()
    elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    budget = "" if limit is None else " (limit %ds)" % limit
    line = "[%s] criterion %d: %s; %s; %.2fs%s" % (status, number, title, detail, elapsed, budget)
    return ok and in_time, line


@pytest.mark.parametrize("number,title,func,limit", CRITERIA, ids=["criterion_%d" % c[0] for c in CRITERIA])
def test_criterion(number, title, func, limit, capsys):
    ok, line = run_one(number, title, func, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_one(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
