from __future__ import annotations

from collections import Counter
from math import factorial

import pytest
from hypothesis import given

from csfpos.dyck import IncompGraph, UnitIntervalPoset, incomparability_graph
from csfpos.expansions import BasisError, SymExpansion
from csfpos.oracles import (
    DEFAULT_MAX_N,
    ResourceLimitError,
    acyclic_orientation_poly,
    acyclic_orientation_polys,
    acyclic_orientation_polys_naive,
    check_limit,
    count_proper_colorings,
    cross_validate,
    e_in_monomials,
    e_to_m,
    max_n,
    monomial_at_ones,
    monomial_expansion_bruteforce,
    s_to_m,
    sink_identity_discrepancy,
    specialize_ones,
)
from csfpos.qpoly import QPoly

from strategies import posets


def test_complete_graph_monomials():
    X = monomial_expansion_bruteforce(IncompGraph.complete(3))
    assert X.terms == {(1, 1, 1): QPoly([1, 2, 2, 1])}


def test_path_graph_monomials():
    X = monomial_expansion_bruteforce(incomparability_graph(UnitIntervalPoset.from_dyck((2, 3))))
    assert X[(2, 1)] == QPoly([0, 1])
    assert X[(1, 1, 1)] == QPoly([1, 4, 1])
    assert X[(3,)] == QPoly()


def test_edgeless_graph_is_power_of_e1():
    X = monomial_expansion_bruteforce(IncompGraph(3))
    assert X.terms == {(3,): QPoly([1]), (2, 1): QPoly([3]), (1, 1, 1): QPoly([6])}


def test_e_in_monomials():
    assert e_in_monomials((2, 1)) == {(2, 1): 1, (1, 1, 1): 3}
    assert e_in_monomials((3,)) == {(1, 1, 1): 1}
    assert e_in_monomials((1, 1)) == {(2,): 1, (1, 1): 2}


def test_s_to_m_uses_kostka():
    X = s_to_m(SymExpansion("s", 3, {(2, 1): QPoly([1])}))
    assert X.terms == {(2, 1): QPoly([1]), (1, 1, 1): QPoly([2])}


def test_converters_check_basis():
    with pytest.raises(BasisError):
        e_to_m(SymExpansion("s", 1, {(1,): QPoly([1])}))
    with pytest.raises(BasisError):
        s_to_m(SymExpansion("e", 1, {(1,): QPoly([1])}))
    with pytest.raises(BasisError):
        specialize_ones(SymExpansion("e", 1), 2)


def test_monomial_at_ones():
    assert monomial_at_ones((2, 1), 3) == 6
    assert monomial_at_ones((1, 1), 3) == 3
    assert monomial_at_ones((1, 1, 1, 1), 3) == 0


def test_limit_and_env_override(monkeypatch):
    monkeypatch.delenv("CSF_MAX_N", raising=False)
    assert max_n() == DEFAULT_MAX_N == 9
    with pytest.raises(ResourceLimitError):
        check_limit(10)
    monkeypatch.setenv("CSF_MAX_N", "3")
    with pytest.raises(ResourceLimitError):
        monomial_expansion_bruteforce(IncompGraph.complete(4))
    monkeypatch.setenv("CSF_MAX_N", "many")
    with pytest.raises(ResourceLimitError):
        max_n()
    check_limit(12, limit=12)


def test_cross_validate_report():
    rep = cross_validate(UnitIntervalPoset.from_dyck((2, 4, 4)))
    assert rep.passed
    assert rep.to_dict() == {"dyck": [2, 4, 4], "n": 4, "status": "pass"}


def test_orientation_counts_small():
    # the path 1-2-3 is a tree, so all four orientations are acyclic
    polys = acyclic_orientation_polys(incomparability_graph(UnitIntervalPoset.from_dyck((2, 3))))
    assert sum(p(1) for p in polys.values()) == 4
    assert acyclic_orientation_poly(IncompGraph.complete(3), 1) == QPoly([1, 2, 2, 1])
    assert acyclic_orientation_poly(IncompGraph.complete(3), 2) == QPoly()


@given(posets(max_n=5))
def test_specialization_gives_chromatic_polynomial(P):
    G = incomparability_graph(P)
    X = monomial_expansion_bruteforce(G)
    for t in range(0, 4):
        assert specialize_ones(X, t) == count_proper_colorings(G, t)


@given(posets(max_n=6))
def test_fast_orientations_match_naive(P):
    G = incomparability_graph(P)
    assert acyclic_orientation_polys(G) == acyclic_orientation_polys_naive(G)


@given(posets(max_n=6))
def test_acyclic_orientations_count_chromatic_at_minus_one(P):
    G = incomparability_graph(P)
    total = sum(p(1) for p in acyclic_orientation_polys(G).values())
    # chi(-1) = (-1)^n * (number of acyclic orientations); chi via the brute-force monomials
    X = monomial_expansion_bruteforce(G)
    chi_at_minus_one = sum(p(1) * _m_at_minus_one(lam) for lam, p in X.terms.items())
    assert total == (-1) ** P.n * chi_at_minus_one


def _m_at_minus_one(lam):
    """m_lam(1^t) = t(t-1)...(t-l+1) / prod(mult!), as a polynomial in t, at t = -1."""
    out = 1
    for i in range(len(lam)):
        out *= -1 - i
    for k in Counter(lam).values():
        out //= factorial(k)
    return out


@given(posets(max_n=6))
def test_symmetry_and_cross_validation(P):
    assert cross_validate(P).passed


@given(posets(max_n=6))
def test_sink_identity(P):
    assert sink_identity_discrepancy(P) is None
