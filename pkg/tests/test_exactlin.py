"""Exact linear algebra: echelon forms, subspaces, covering."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from properact.exactlin import (
    NotCoveredError,
    Subspace,
    covering_member,
    dot,
    identity_matrix,
    mat_mul,
    mat_vec,
    matrix_rank,
    nullspace,
    rref,
    vec,
    vec_add,
    vec_scale,
)

rationals = st.fractions(
    min_value=-5, max_value=5, max_denominator=4
)


def matrices(rows, cols):
    return st.lists(
        st.lists(rationals, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    )


@given(matrices(3, 4))
def test_rref_is_idempotent(m):
    once = rref(m)
    assert rref(once) == once


@given(matrices(3, 4))
def test_rank_nullity(m):
    r = matrix_rank(m)
    null = nullspace(m, 4)
    assert r + len(null) == 4
    for v in null:
        assert all(dot(row, v) == 0 for row in m)


@given(matrices(2, 3))
def test_rref_preserves_row_space(m):
    # every original row must reduce to zero against the echelon basis
    sp = Subspace.from_spanning([tuple(r) for r in m], 3)
    for row in m:
        assert sp.contains_vector(tuple(row))


def test_rref_unit_pivots():
    m = rref([vec([2, 4, 6]), vec([1, 1, 1])])
    for row in m:
        pivot = next(x for x in row if x != 0)
        assert pivot == 1


def test_subspace_equality_is_representation_free():
    a = Subspace.from_spanning([vec([1, 0, 1]), vec([0, 1, 1])])
    b = Subspace.from_spanning([vec([1, 1, 2]), vec([1, -1, 0])])
    assert a == b
    assert hash(a) == hash(b)


def test_subspace_lattice_small():
    u = Subspace.from_spanning([vec([1, 0, 0]), vec([0, 1, 0])])
    v = Subspace.from_spanning([vec([0, 1, 0]), vec([0, 0, 1])])
    assert u.sum(v) == Subspace.full(3)
    assert u.intersection(v) == Subspace.from_spanning([vec([0, 1, 0])])


@given(matrices(2, 4), matrices(2, 4))
@settings(max_examples=50)
def test_dimension_formula(mu, mv):
    u = Subspace.from_spanning([tuple(r) for r in mu], 4)
    v = Subspace.from_spanning([tuple(r) for r in mv], 4)
    assert u.sum(v).dim + u.intersection(v).dim == u.dim + v.dim


@given(matrices(2, 4))
def test_intersection_with_full_and_zero(mu):
    u = Subspace.from_spanning([tuple(r) for r in mu], 4)
    assert u.intersection(Subspace.full(4)) == u
    assert u.intersection(Subspace.zero(4)) == Subspace.zero(4)
    assert u.sum(Subspace.zero(4)) == u


def test_map_by_identity_and_scaling():
    u = Subspace.from_spanning([vec([1, 2, 3])])
    assert u.map_by(identity_matrix(3)) == u
    doubled = tuple(tuple(2 * x for x in row) for row in identity_matrix(3))
    assert u.map_by(doubled) == u  # scaling fixes every line


def test_mat_mul_vs_mat_vec():
    a = (vec([1, 2]), vec([3, 4]))
    b = (vec([0, 1]), vec([1, 0]))
    ab = mat_mul(a, b)
    x = vec([5, 7])
    assert mat_vec(ab, x) == mat_vec(a, mat_vec(b, x))


def test_covering_member_finds_least_index():
    b = Subspace.from_spanning([vec([1, 1, 0])])
    parts = [
        Subspace.from_spanning([vec([1, 0, 0])]),
        Subspace.from_spanning([vec([1, 1, 0]), vec([0, 0, 1])]),
        Subspace.full(3),
    ]
    assert covering_member(b, parts) == 1


def test_covering_member_certificate():
    # a plane is not the union of two lines; the certificate must expose that
    b = Subspace.from_spanning([vec([1, 0, 0]), vec([0, 1, 0])])
    parts = [
        Subspace.from_spanning([vec([1, 0, 0])]),
        Subspace.from_spanning([vec([0, 1, 0])]),
    ]
    with pytest.raises(NotCoveredError) as exc:
        covering_member(b, parts)
    cert = exc.value.certificate
    assert b.contains_vector(cert)
    assert not any(p.contains_vector(cert) for p in parts)


def test_vec_arithmetic():
    a = vec([1, 2])
    assert vec_add(a, vec_scale(Fraction(-1), a)) == vec([0, 0])
