import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from admperm.errors import ConfigurationError
from admperm.exact import dot, sub
from admperm.oracles import Hull
from admperm.rootsys import (WeylPolytope, affine_reflect, build_root_datum, conv_membership,
                             dominance_leq, dominant_representative, enumerate_finite_weyl,
                             longest_element, weyl_orbit)

ORDERS = {("GL", 3): 6, ("GL", 4): 24, ("A", 2): 6, ("B", 2): 8, ("C", 3): 48,
          ("D", 4): 192, ("G", 2): 12, ("F", 4): 1152, ("GSp", 4): 8, ("GSp", 6): 48}
POSITIVE = {("GL", 3): 3, ("B", 3): 9, ("C", 4): 16, ("D", 5): 20, ("G", 2): 6, ("F", 4): 24}


@pytest.mark.parametrize("key,order", sorted(ORDERS.items()))
def test_weyl_group_order(key, order):
    assert len(enumerate_finite_weyl(build_root_datum(*key))) == order


@pytest.mark.parametrize("key,n", sorted(POSITIVE.items()))
def test_positive_root_count(key, n):
    assert build_root_datum(*key).n_pos == n


@pytest.mark.parametrize("key", [("B", 3), ("C", 3), ("G", 2), ("F", 4), ("GSp", 6)])
def test_cartan_pairings_are_integral_and_coroots_pair_to_two(key):
    d = build_root_datum(*key)
    for a, c in zip(d.roots, d.coroots):
        assert dot(a, c) == 2
    for row in d.cartan_pairings:
        assert all(isinstance(x, int) or Fraction(x).denominator == 1 for x in row)


def test_g2_realization():
    d = build_root_datum("G", 2)
    assert d.highest_root == (-1, 0, 1)
    lengths = sorted({dot(a, a) for a in d.roots})
    assert lengths[1] / lengths[0] == 3


def test_longest_element_length_is_number_of_positive_roots():
    for key in [("B", 3), ("D", 4), ("G", 2)]:
        d = build_root_datum(*key)
        assert longest_element(d).length == d.n_pos


def test_bad_sizes_are_rejected():
    with pytest.raises(ConfigurationError):
        build_root_datum("B", 1)
    with pytest.raises(ConfigurationError):
        build_root_datum("GSp", 5)
    with pytest.raises(ConfigurationError):
        build_root_datum("E", 6)


def test_word_reproduces_element():
    d = build_root_datum("C", 3)
    for w in enumerate_finite_weyl(d):
        assert d.weyl_from_word(w.word) == w
        assert len(w.word) == w.length


def test_action_is_a_group_action():
    d = build_root_datum("B", 3)
    ws = enumerate_finite_weyl(d)
    v = (Fraction(3, 2), -1, Fraction(1, 3))
    for a, b in itertools.islice(itertools.product(ws, ws), 0, 2000, 7):
        assert (a * b)(v) == a(b(v))


vec3 = st.tuples(*[st.fractions(min_value=-5, max_value=5, max_denominator=6)] * 3)


@settings(max_examples=60, deadline=None)
@given(v=vec3, k=st.integers(-3, 3), j=st.integers(0, 8))
def test_affine_reflection_is_an_involution_fixing_its_wall(v, k, j):
    d = build_root_datum("B", 3)
    alpha = d.positive_roots[j]
    r = affine_reflect(d, alpha, k, v)
    assert affine_reflect(d, alpha, k, r) == tuple(Fraction(x) for x in v)
    assert dot(alpha, r) == 2 * k - dot(alpha, v)


@settings(max_examples=40, deadline=None)
@given(v=st.tuples(*[st.integers(-4, 4)] * 3))
def test_dominant_representative(v):
    d = build_root_datum("C", 3)
    u, w = dominant_representative(d, v)
    assert d.is_dominant(u)
    assert w(v) == u
    assert u in weyl_orbit(d, v)


@settings(max_examples=30, deadline=None)
@given(a=st.tuples(*[st.integers(-3, 3)] * 2), b=st.tuples(*[st.integers(-3, 3)] * 2))
def test_dominance_order_is_conv_inclusion(a, b):
    """For dominant a, b in the same coset: a <= b iff a lies in Conv(b)."""
    d = build_root_datum("B", 2)
    a = dominant_representative(d, a)[0]
    b = dominant_representative(d, b)[0]
    if not d.in_coroot_lattice(sub(a, b)):
        return
    assert dominance_leq(d, a, b) == conv_membership(d, b, a)


@pytest.mark.parametrize("key,mu", [(("G", 2), (-1, -1, 2)), (("C", 2), (2, 1)), (("GL", 3), (2, 1, 0))])
def test_conv_membership_against_hull(key, mu):
    d = build_root_datum(*key)
    hull = Hull(weyl_orbit(d, mu))
    poly = WeylPolytope(d, mu)
    for v in itertools.product(range(-3, 4), repeat=d.ambient_dim):
        assert conv_membership(d, mu, v) == hull.contains(v) == poly.contains(v)


def test_polytope_lattice_points_are_orbit_unions():
    d = build_root_datum("B", 2)
    pts = WeylPolytope(d, (2, 1)).lattice_points
    for p in pts:
        assert set(weyl_orbit(d, p)) <= set(pts)
    assert (0, 0) not in pts  # wrong coset
    assert (1, 0) in pts


def test_base_alcove_vertices_lie_on_walls():
    for key in [("B", 3), ("F", 4), ("G", 2), ("GSp", 6)]:
        d = build_root_datum(*key)
        verts = d.base_alcove_vertices
        assert len(verts) == d.rank + 1
        for v in verts:
            vals = [d.pair_root(j, v) for j in range(d.n_pos)]
            assert all(0 <= x <= 1 for x in vals)
        b = d.barycenter
        assert all(0 < d.pair_root(j, b) < 1 for j in range(d.n_pos))


def test_json_is_stable():
    d = build_root_datum("C", 2)
    assert d.to_json() == build_root_datum("C", 2).to_json()
    assert d.fingerprint != build_root_datum("B", 2).fingerprint
    assert math.isfinite(len(d.fingerprint))
