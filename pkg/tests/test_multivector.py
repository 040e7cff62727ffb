from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crlie import (
    Bivector, LieAlgebra, Trivector, extend_derivation_2, extend_derivation_3,
    extend_map_2, in_wedge_subspace, schouten, sl2, so3, wedge, wedge3,
)
from crlie.linalg import Matrix, Subspace, basis_vector, vector
from crlie.multivector import apply_2, apply_3, pair_basis

from oracles import schouten_decomposable

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=2)


def biv(dim):
    keys = pair_basis(dim)
    return st.lists(rationals, min_size=len(keys), max_size=len(keys)).map(
        lambda cs: Bivector(dim, dict(zip(keys, cs))))


def test_wedge_examples():
    assert wedge(basis_vector(3, 0), basis_vector(3, 1)) == Bivector(3, {(0, 1): 1})
    x = vector(["2", "1/3", "-1"])
    assert wedge(x, x).is_zero()


def test_wedge3_odd_permutation():
    t = wedge3(basis_vector(3, 2), basis_vector(3, 1), basis_vector(3, 0))
    assert t == Trivector(3, {(0, 1, 2): -1})


def test_extend_map_identity():
    assert extend_map_2(Matrix.identity(3)) == Matrix.identity(3)


def test_extend_map_j_on_so3():
    j = Matrix([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    image = apply_2(extend_map_2(j), Bivector(3, {(0, 1): 1}))
    # j e1 ^ j e2 = e2 ^ (-e1) = e1 ^ e2
    assert image == Bivector(3, {(0, 1): 1})


def test_extend_derivation_3_ad_h_on_sl2():
    g = sl2()
    d3 = extend_derivation_3(g.ad(basis_vector(3, 2)))
    # Leibniz term-by-term: [h,e]^f^h + e^[h,f]^h + e^f^[h,h] = 2e^f^h - 2e^f^h
    assert apply_3(d3, Trivector(3, {(0, 1, 2): 1})).is_zero()


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3))
def test_lambda2_is_multiplicative(a_rows, b_rows):
    a, b = Matrix(a_rows), Matrix(b_rows)
    assert extend_map_2(a * b) == extend_map_2(a) * extend_map_2(b)


# -- schouten ----------------------------------------------------------------

def test_schouten_abelian_vanishes():
    g = LieAlgebra.abelian(4)
    p = Bivector(4, {(0, 1): 1, (2, 3): Fraction(1, 2)})
    q = Bivector(4, {(0, 2): -1})
    assert schouten(g, p, q).is_zero()


def test_schouten_so3_frozen_against_oracle():
    g = so3()
    p = Bivector(3, {(0, 1): 1})
    t = schouten(g, p, p)
    assert t == schouten_decomposable(g, p, p)
    assert t == Trivector(3, {(0, 1, 2): 2})


def test_schouten_sl2_frozen_against_oracle():
    g = sl2()
    p = Bivector(3, {(0, 1): 1})  # e ^ f
    t = schouten(g, p, p)
    assert t == schouten_decomposable(g, p, p)
    assert t == Trivector(3, {(0, 1, 2): 2})  # 2 e^f^h


@settings(max_examples=30, deadline=None)
@given(biv(3), biv(3))
def test_schouten_symmetric_for_bivectors(p, q):
    g = so3()
    assert schouten(g, p, q) == schouten(g, q, p)


@settings(max_examples=30, deadline=None)
@given(biv(3), biv(3), biv(3))
def test_schouten_bilinear(p, p2, q):
    g = sl2()
    lhs = schouten(g, p + p2, q)
    rhs = schouten(g, p, q) + schouten(g, p2, q)
    assert lhs == rhs


@settings(max_examples=20, deadline=None)
@given(biv(3))
def test_ad_acts_by_derivations_of_schouten(p):
    for g in (so3(), sl2()):
        t = schouten(g, p, p)
        for i in range(3):
            ad = g.ad(basis_vector(3, i))
            lhs = apply_3(extend_derivation_3(ad), t)
            dp = apply_2(extend_derivation_2(ad), p)
            rhs = schouten(g, dp, p).scale(2)
            assert lhs == rhs


# -- wedge-subspace membership ----------------------------------------------

def test_membership_full_space_always_true():
    t = Trivector(3, {(0, 1, 2): 7})
    assert in_wedge_subspace(t, Subspace.full(3))


def test_membership_so3_volume_in_e3_wedge():
    t = Trivector(3, {(0, 1, 2): 2})
    assert in_wedge_subspace(t, Subspace.span([basis_vector(3, 2)], 3))


def test_membership_zero_subspace():
    t = Trivector(3, {(0, 1, 2): 2})
    assert not in_wedge_subspace(t, Subspace.zero(3))
    assert in_wedge_subspace(Trivector(3), Subspace.zero(3))


@settings(max_examples=20, deadline=None)
@given(st.fractions(min_value=Fraction(1, 3), max_value=5, max_denominator=3))
def test_membership_invariant_under_scaling(c):
    t = Trivector(4, {(0, 1, 2): 2, (0, 2, 3): -1})
    for u in (Subspace.span([basis_vector(4, 2)], 4), Subspace.zero(4),
              Subspace.full(4)):
        assert in_wedge_subspace(t, u) == in_wedge_subspace(t.scale(c), u)


def test_dimension_mismatch_raises():
    with pytest.raises(ValueError):
        wedge(basis_vector(2, 0), basis_vector(3, 0))
    with pytest.raises(ValueError):
        schouten(so3(), Bivector(4, {(0, 1): 1}), Bivector(4, {(0, 1): 1}))
