"""Hecke graphs, eigenforms, cusp and toroidal checks for rank-3 bundles on P^1.

Thin wrappers over the compiled ``_pbun`` module. Projective classes are
tuples of gaps, e.g. ``(0, 2)`` for O + O + O(2); rational values come back
as :class:`fractions.Fraction`.
"""

from fractions import Fraction

from . import _pbun
from ._pbun import (
    PbunError,
    canonical_projective,
    cusp_space_dimension,
    dualize,
    enumerate_pbun,
    ext_dim,
    h0,
    hecke_graph,
    middle_term,
    pbun_count,
    splitting_from_h0_profile,
    verify_rules,
)

__all__ = [
    "PbunError",
    "canonical_projective",
    "cusp_space_dimension",
    "cuspidal_sum",
    "dualize",
    "enumerate_pbun",
    "ext_dim",
    "gaussian_binomial",
    "h0",
    "hecke_graph",
    "middle_term",
    "neighbor_oracle",
    "pbun_count",
    "phi_neighbors",
    "solve_by_elimination",
    "solve_eigenform",
    "splitting_from_h0_profile",
    "toroidal_eigen_intersection",
    "toroidal_sum",
    "verify_hecke_relations",
    "verify_rules",
]


def _rat(x):
    # Floats are rejected on purpose: everything here is exact.
    if isinstance(x, float):
        raise TypeError("use int, Fraction or a 'p/q' string, not float")
    return str(Fraction(x)) if not isinstance(x, str) else x


def _table(pairs):
    return {tuple(k): Fraction(v) for k, v in pairs}


def _untable(table):
    return {tuple(k): _rat(v) for k, v in table.items()}


def neighbor_oracle(gaps, r, q0):
    """Brute-force {neighbor gaps: count} over codimension-r fiber subspaces."""
    return {tuple(k): v for k, v in _pbun.neighbor_oracle(list(gaps), r, q0)}


def gaussian_binomial(n, r):
    """Coefficients of [n choose r]_q, constant term first."""
    return [int(c) for c in _pbun.gaussian_binomial(n, r)]


def phi_neighbors(r, gaps):
    """[(gaps, [coefficients])] for the Phi_{x,r} neighbors of a class."""
    return [(tuple(t), [int(c) for c in w]) for t, w in _pbun.phi_neighbors(r, list(gaps))]


def solve_eigenform(lambda1, lambda2, q0, bound, f0=1):
    return _table(_pbun.solve_eigenform(_rat(lambda1), _rat(lambda2), q0, bound, _rat(f0)))


def solve_by_elimination(lambda1, lambda2, q0, bound, f0=1):
    return _table(_pbun.solve_by_elimination(_rat(lambda1), _rat(lambda2), q0, bound, _rat(f0)))


def verify_hecke_relations(table, lambda1, lambda2, q0, bound):
    return _pbun.verify_hecke_relations(_untable(table), _rat(lambda1), _rat(lambda2), q0, bound)


def cuspidal_sum(table, bound, quotient, sub, q0):
    return Fraction(_pbun.cuspidal_sum(_untable(table), bound, list(quotient), list(sub), q0))


def toroidal_sum(table, bound, q0):
    return Fraction(_pbun.toroidal_sum(_untable(table), bound, q0))


def toroidal_eigen_intersection(lambda1, lambda2, q0, bound):
    out = dict(_pbun.toroidal_eigen_intersection(_rat(lambda1), _rat(lambda2), q0, bound))
    out["eigenform_sum"] = Fraction(out["eigenform_sum"])
    return out
