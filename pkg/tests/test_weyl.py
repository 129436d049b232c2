"""Weyl group enumeration, longest element, orbits, dominance."""

import math

import pytest

from properact.exactlin import dot, vec, vec_neg, Subspace
from properact.rootsys import root_system
from properact.weyl import (
    EnumerationCapError,
    WeylGroup,
    is_regular_dominant,
    reflection_matrix,
)


def weyl_order_formula(family, n):
    """Orders from the standard product formulas, computed independently."""
    if family == "A":
        return math.factorial(n + 1)
    if family in ("B", "C", "BC"):
        return 2**n * math.factorial(n)
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if family == "G":
        return 12
    if family == "F":
        return 1152
    return {6: 51840, 7: 2903040, 8: 696729600}[n]


SMALL = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("BC", 2), ("D", 4), ("G", 2)]


@pytest.mark.parametrize("family,rank", SMALL)
def test_enumerated_order_matches_formula(family, rank):
    group = WeylGroup(root_system(family, rank))
    assert len(group.elements()) == weyl_order_formula(family, rank)
    assert group.order == weyl_order_formula(family, rank)


@pytest.mark.parametrize("family,rank", SMALL)
def test_longest_element_properties(family, rank):
    rs = root_system(family, rank)
    group = WeylGroup(rs)
    w0 = group.longest_element()
    assert w0.then(w0).is_identity()
    for alpha in rs.simple_roots:
        assert vec_neg(w0.apply(alpha)) in set(rs.simple_roots)
    # w0 sends every positive root to a negative one
    positives = set(rs.positive_roots())
    for alpha in positives:
        assert vec_neg(w0.apply(alpha)) in positives


def test_reflection_is_involution_and_fixes_wall():
    rs = root_system("B", 3)
    for alpha in sorted(rs.roots)[:6]:
        s = reflection_matrix(rs, alpha)
        assert s.then(s).is_identity()
        assert s.apply(alpha) == vec_neg(alpha)
        # any vector orthogonal to alpha is fixed
        probe = tuple(x for x in alpha)
        fixed = vec([alpha[1], -alpha[0], 0])
        if dot(fixed, alpha) == 0:
            assert s.apply(fixed) == fixed


@pytest.mark.parametrize(
    "family,rank,expected",
    [
        ("A", 1, 1),
        ("A", 2, 1),
        ("A", 3, 2),
        ("A", 4, 2),
        ("B", 3, 3),
        ("C", 3, 3),
        ("BC", 2, 2),
        ("D", 4, 4),
        ("D", 5, 4),
        ("G", 2, 2),
        ("F", 4, 4),
        ("E", 6, 4),
    ],
)
def test_antipodal_subspace_dimension(family, rank, expected):
    group = WeylGroup(root_system(family, rank))
    assert group.minus_w0_fixed_space().dim == expected


def test_antipodal_subspace_of_a2():
    # the (-1)-eigenspace of coordinate reversal inside x1+x2+x3 = 0
    group = WeylGroup(root_system("A", 2))
    b = group.minus_w0_fixed_space()
    assert b == Subspace.from_spanning([vec([1, 0, -1])])


@pytest.mark.parametrize("family,rank", SMALL)
def test_dominant_representative(family, rank):
    rs = root_system(family, rank)
    group = WeylGroup(rs)
    x = vec(range(rs.ambient_dim, 0, -1))
    dom, u = group.dominant_representative(x)
    assert u.apply(x) == dom
    assert all(dot(alpha, dom) >= 0 for alpha in rs.simple_roots)
    # uniqueness: every orbit point reduces to the same dominant vector
    for y in group.orbit_of_vector(x):
        assert group.dominant_representative(y)[0] == dom


def test_orbit_size_divides_group_order():
    rs = root_system("B", 3)
    group = WeylGroup(rs)
    for x in [vec([1, 0, 0]), vec([1, 1, 0]), vec([3, 2, 1])]:
        assert group.order % len(group.orbit_of_vector(x)) == 0


def test_regular_orbit_is_free():
    rs = root_system("A", 3)
    group = WeylGroup(rs)
    x = vec([4, 3, 2, 1])
    assert is_regular_dominant(rs, x)
    assert len(group.orbit_of_vector(x)) == group.order


def test_orbit_meets_subspace_witness():
    rs = root_system("A", 2)
    group = WeylGroup(rs)
    s = Subspace.from_spanning([vec([1, 0, -1])])
    w = group.orbit_meets_subspace(vec([1, -1, 0]), s)
    assert w is not None
    assert s.contains_vector(w.apply(vec([1, -1, 0])))
    # a vector whose orbit misses the line x2 = x1
    miss = Subspace.from_spanning([vec([1, 1, -2])])
    assert group.orbit_meets_subspace(vec([1, 0, -1]), miss) is None


def test_subspace_orbit_consistency():
    rs = root_system("B", 2)
    group = WeylGroup(rs)
    s = Subspace.from_spanning([vec([1, 0])])
    items = list(group.subspace_orbit_items(s))
    translates = {t for t, _ in items}
    assert translates == group.orbit_of_subspace(s)
    for t, w in items:
        assert s.map_by(w.matrix) == t


def test_enumeration_cap_enforced():
    group = WeylGroup(root_system("D", 4), enumeration_cap=10)
    with pytest.raises(EnumerationCapError):
        group.elements()


def test_wall_containing_fixed_set():
    rs = root_system("A", 2)
    group = WeylGroup(rs)
    for w in group.elements():
        if w.is_identity():
            continue
        wall = group.wall_containing_fixed_set(w)
        assert wall in rs.roots
