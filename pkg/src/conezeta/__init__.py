"""Exact generating functions of lattice points in cones, and the Weyl-weighted zeta functions built from them."""
from .algebra import (FactoredRational, LaurentPoly, MultiGenFun, add, eq_rational, from_json,
                      invert_variables, monomial_ratio_test, mul, normalize, render,
                      specialize_monomials, to_json)
from .genfun import (GenFunEngine, GenFunSpec, HypothesisError, PiecewiseWeight, check_reciprocity,
                     genfun_cell, genfun_region, validate_weight)
from .geometry import Cell, CellComplex, enumerate_cells, extreme_rays, face_leq, validate_complex
from .oracle import TruncatedSeries, compare, lattice_sum_truncated, series_expand
from .weyl import WeylGroup, build_root_system, descent_set
from .zeta import (FneqCertificate, WeightDatum, ZetaProblem, build_complex_from_weights,
                   choose_dual_basis, fneq_detect, torus_closed_form, torus_example,
                   verify_main_theorem, weighted_zeta)

__version__ = "0.1.0"
