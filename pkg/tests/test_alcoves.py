import random

import pytest

from admperm import affine, alcoves
from admperm.alcoves import (Alcove, Window, alcove_of, base_alcove, distance, element_from_coords,
                             in_acute_cone, is_minimal, minimal_gallery, strong_set)
from admperm.errors import ConfigurationError
from admperm.rootsys import build_root_datum, enumerate_finite_weyl
from admperm.verify import orbit_cone_points, random_element, waff_ball


@pytest.mark.parametrize("key", [("B", 2), ("G", 2), ("C", 3), ("GL", 4)])
def test_alcove_coordinates_round_trip(key):
    d = build_root_datum(*key)
    for x in waff_ball(d, 4):
        A = alcove_of(x)
        assert A.element == x
        assert A.contains(A.interior_point)
        assert element_from_coords(d, A.coords) == x


def test_unrealizable_coordinates():
    d = build_root_datum("GL", 3)
    # <a1> and <a2> in [0,1) force <a1 + a2> in [0,2); 5 is impossible
    assert not alcoves.is_realizable(d, (0, 0, 5))
    with pytest.raises(ConfigurationError):
        Alcove(d, (0, 0, 5)).element


def test_distance_is_length():
    d = build_root_datum("B", 2)
    rng = random.Random(3)
    for _ in range(60):
        x = random_element(d, rng, 7)
        y = random_element(d, rng, 7)
        A, B = alcove_of(x), alcove_of(y)
        assert distance(A, B) == affine.compose(x.inverse(), y).length
        g = minimal_gallery(A, B)
        assert is_minimal(g) and len(g) == distance(A, B)
        assert g.alcoves[0] == A and g.alcoves[-1] == B


def test_neighbors_share_one_wall():
    d = build_root_datum("G", 2)
    A = alcove_of(affine.from_word(d, [0, 1, 2]))
    nbrs = A.neighbors()
    assert len(nbrs) == d.rank + 1
    for B in nbrs:
        assert distance(A, B) == 1
        assert alcoves.common_wall(A, B) is not None


def test_acute_cone_of_identity_direction_contains_dominant_translations():
    d = build_root_datum("C", 2)
    A0 = base_alcove(d)
    e = d.identity
    assert in_acute_cone(A0, e, A0)
    assert in_acute_cone(A0, e, alcove_of(affine.translation(d, (2, 1))))
    assert not in_acute_cone(A0, e, alcove_of(affine.translation(d, (-1, 0))))


def test_every_direction_cone_is_found():
    d = build_root_datum("B", 2)
    A0 = base_alcove(d)
    for w in enumerate_finite_weyl(d):
        B = alcove_of(affine.translation(d, w((3, 1))))
        assert alcoves.find_direction(A0, B) == w


def test_interior_point_is_required():
    d = build_root_datum("B", 2)
    A0 = base_alcove(d)
    with pytest.raises(ConfigurationError):
        alcoves.pointed_cone_member((0, 0), A0, d.identity, A0)


@pytest.mark.parametrize("n", [3, 4])
def test_type_a_strong_sets_are_orbit_cones(n):
    d = build_root_datum("GL", n)
    window = Window((-2,) * d.rank)
    for a in d.base_alcove_vertices:
        for w in enumerate_finite_weyl(d)[::3]:
            assert strong_set(d, a, w, window) == orbit_cone_points(d, a, w, window)


def test_strong_set_at_origin_is_a_cone():
    d = build_root_datum("C", 2)
    window = Window((-2, -2))
    s = strong_set(d, (0, 0), d.identity, window)
    assert (0, 0) in s
    assert all(d.simple_coroot_coords(p)[0] <= 0 and d.simple_coroot_coords(p)[1] <= 0 for p in s)
    assert len(s) == 9


def test_parabolic_decomposition():
    d = build_root_datum("B", 2)
    for J in alcoves.vertex_stabilizers(d):
        for x in waff_ball(d, 3):
            m, u = alcoves.parabolic_decompose(x, J)
            assert affine.compose(m, u) == x
            assert m.length + u.length == x.length
            assert all(not m.is_right_descent(j) for j in J)
