import pytest

from admperm import affine, musets, steinberg
from admperm.alcoves import alcove_of, base_alcove
from admperm.errors import ConfigurationError
from admperm.rootsys import build_root_datum


@pytest.mark.parametrize("m", [4, 6, 8])
def test_flip_on_gl_gives_gsp(m):
    th = steinberg.build_theta(build_root_datum("GL", m))
    assert th.fixed_datum == build_root_datum("GSp", m)


def test_flip_on_odd_a_host_gives_type_c():
    th = steinberg.build_theta(build_root_datum("A", 4))
    f = th.fixed_datum
    assert f.family == "C" and f.rank == 2 and f.n_pos == 4


def test_unsupported_host():
    with pytest.raises(ConfigurationError):
        steinberg.build_theta(build_root_datum("B", 3))


def test_embedding_is_a_homomorphism_into_the_fixed_part():
    th = steinberg.build_theta(build_root_datum("GL", 4))
    f = th.fixed_datum
    xs = steinberg.ball(f, 3)
    for x in xs:
        y = th.embed_element(x)
        assert th.in_fixed_group(y)
        assert th.restrict_element(y) == x
        for z in xs[:8]:
            assert th.embed_element(affine.compose(x, z)) == affine.compose(y, th.embed_element(z))


def test_restriction_of_base_alcove():
    th = steinberg.build_theta(build_root_datum("GL", 6))
    assert th.restrict_alcove(base_alcove(th.host)) == base_alcove(th.fixed_datum)
    x = affine.from_word(th.host, [1])
    assert th.restrict_alcove(alcove_of(x)) is None


def test_half_roots_in_odd_host():
    th = steinberg.build_theta(build_root_datum("A", 4))
    kinds = {th.bar_theta(b)[1] for b in th.host.roots}
    assert kinds == {"root", "half-root"}


def test_bruhat_inheritance_from_gl():
    th = steinberg.build_theta(build_root_datum("GL", 4))
    xs = steinberg.ball(th.fixed_datum, 3)
    for x in xs:
        for y in xs:
            a, b = steinberg.check_bruhat_inheritance(th, x, y)
            assert a == b


def test_gsp_adm_from_gl_perm():
    th = steinberg.build_theta(build_root_datum("GL", 4))
    for mu in [(1, 1, 0, 0), (2, 1, 1, 0), (1, 0, 0, -1)]:
        assert set(steinberg.adm_theta_via_perm(th, mu)) == set(musets.enumerate_adm(th.fixed_datum, mu))


def test_odd_orthogonal_counts():
    c = steinberg.odd_orthogonal_counts(2, (1, 0)).counts
    assert c == {"adm_B": 13, "adm_C": 19, "perm_host_cap_B": 19}


def test_non_inheritance_witness():
    r = steinberg.non_inheritance_witness(2)
    assert r == {"s0_leq_s1": False, "s1_leq_s0": False, "image_of_s0_is_s0s1s0": True,
                 "image_of_s1_is_s1": True, "images_related": True, "image_of_tau_is_s0": True}


def test_coset_non_inheritance():
    x, y = steinberg.search_coset_non_inheritance(2, 4)
    bc = steinberg.b_in_c(2)
    assert x.omega == y.omega and not x.in_waff()
    assert not affine.bruhat_leq(x, y)
    assert affine.bruhat_leq(bc.embed(x), bc.embed(y))


def test_iota_embedding_round_trip():
    ci = steinberg.c_in_fixed(2)
    for x in steinberg.ball(ci.theta.fixed_datum, 0) + steinberg.ball(build_root_datum("C", 2), 3):
        if x.datum != build_root_datum("C", 2):
            continue
        assert ci.pull_back(ci.embed(x)) == x
