import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from admperm import affine
from admperm.affine import bruhat_leq, compose, from_word, lower_interval, translation
from admperm.errors import ConfigurationError
from admperm.rootsys import build_root_datum, enumerate_finite_weyl
from admperm.verify import one_line, waff_ball

DATA = [("GL", 3), ("B", 2), ("C", 2), ("G", 2), ("B", 3), ("GSp", 4)]
words = st.lists(st.integers(0, 2), max_size=8)


@pytest.mark.parametrize("key", DATA)
def test_composition_matches_action(key):
    d = build_root_datum(*key)
    rng = random.Random(1)
    pts = [d.barycenter] + list(d.base_alcove_vertices)
    for _ in range(40):
        x = from_word(d, [rng.randint(0, d.rank) for _ in range(6)])
        y = from_word(d, [rng.randint(0, d.rank) for _ in range(6)])
        for p in pts:
            assert compose(x, y)(p) == x(y(p))
        assert compose(x, x.inverse()).is_identity()


@settings(max_examples=80, deadline=None)
@given(w=words)
def test_length_counts_separating_walls(w):
    """l(x) is the number of affine root hyperplanes between A_0 and x(A_0)."""
    d = build_root_datum("B", 2)
    x = from_word(d, w)
    b = d.barycenter
    y = x(b)
    walls = 0
    for j in range(d.n_pos):
        lo, hi = sorted((d.pair_root(j, b), d.pair_root(j, y)))
        walls += sum(1 for k in range(-20, 21) if lo < k < hi)
    assert x.length == walls


@settings(max_examples=80, deadline=None)
@given(w=words)
def test_reduced_words(w):
    d = build_root_datum("C", 2)
    x = from_word(d, w)
    r = affine.reduced_word(x)
    assert len(r) == x.length
    assert from_word(d, r) == x
    alt = affine.alternate_reduced_word(x)
    assert len(alt) == x.length and from_word(d, alt) == x


def test_omega_is_length_zero_and_translation_lengths():
    d = build_root_datum("GL", 3)
    t = translation(d, (1, 0, 0))
    assert t.length == 2
    assert t.omega.length == 0 and not t.in_waff()
    w, o = affine.omega_decompose(t)
    assert compose(w, o) == t and w.in_waff()
    assert translation(d, (1, -1, 0)).in_waff()
    with pytest.raises(ConfigurationError):
        affine.reduced_word(t)
    with pytest.raises(ConfigurationError):
        translation(build_root_datum("A", 2), (1, 0, 0))


def test_translation_length_formula():
    d = build_root_datum("B", 3)
    for lam in itertools.product(range(-2, 3), repeat=3):
        expected = sum(abs(d.pair_root(j, lam)) for j in range(d.n_pos))
        assert translation(d, lam).length == expected


def _subword_oracle(x, y) -> bool:
    """x <= y iff some subword of a reduced word of y multiplies to x (within one Omega coset)."""
    if x.omega != y.omega:
        return False
    d = x.datum
    word = affine.reduced_word(compose(y, y.omega.inverse()))
    target = compose(x, x.omega.inverse())
    for mask in itertools.product((0, 1), repeat=len(word)):
        if from_word(d, [s for s, m in zip(word, mask) if m]) == target:
            return True
    return False


@pytest.mark.parametrize("key", [("B", 2), ("G", 2), ("GL", 3)])
def test_bruhat_against_subwords(key):
    d = build_root_datum(*key)
    ball = waff_ball(d, 4)
    tau = translation(d, d.lattice_basis[0]).omega
    elements = ball + [compose(x, tau) for x in ball[:10]]
    for x in elements:
        for y in elements[:40]:
            assert bruhat_leq(x, y) == _subword_oracle(x, y)


def test_lower_interval_is_down_closed():
    d = build_root_datum("C", 2)
    y = from_word(d, [0, 1, 2, 1, 0])
    low = lower_interval(y)
    assert y in low and affine.identity(d) in low
    for x in low:
        assert bruhat_leq(x, y)
    assert len(low) == sum(1 for x in waff_ball(d, 5) if bruhat_leq(x, y))


def _tableau_leq(u, v) -> bool:
    n = len(u)
    return all(all(a <= b for a, b in zip(sorted(u[:k]), sorted(v[:k]))) for k in range(1, n))


@pytest.mark.parametrize("n", [3, 4])
def test_finite_bruhat_matches_tableau_criterion(n):
    d = build_root_datum("GL", n)
    ws = enumerate_finite_weyl(d)
    lines = {w: one_line(w) for w in ws}
    for a in ws:
        for b in ws:
            lhs = bruhat_leq(affine.finite_element(a), affine.finite_element(b))
            assert lhs == _tableau_leq(lines[a], lines[b])


def test_minimal_in_finite_coset():
    d = build_root_datum("B", 2)
    x = translation(d, (2, -1))
    m = affine.minimal_in_finite_coset(x)
    coset = [compose(x, affine.finite_element(w)) for w in enumerate_finite_weyl(d)]
    assert m in coset
    assert m.length == min(c.length for c in coset)
