"""The extended affine Weyl group X_* x| W_0.

An element (lam, w) acts by v -> lam + w(v).  Lengths and descents are read off
the alcove coordinates of x(A_0), so everything stays in integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import ConfigurationError, GuardExceeded
from .exact import normalize, vector
from .rootsys import FiniteWeylElement, RootDatum

INTERVAL_LENGTH_GUARD = 25
BRUHAT_MEMO_LIMIT = 200_000


@dataclass(frozen=True)
class ExtAffineElement:
    datum: RootDatum = field(compare=False, repr=False)
    translation: tuple
    finite: FiniteWeylElement

    def __repr__(self):
        return f"t{list(self.translation)}*{list(self.finite.word)}"

    # -- group law -----------------------------------------------------------
    def __call__(self, v) -> tuple:
        wv = self.finite(v)
        return tuple(normalize(a + b) for a, b in zip(self.translation, wv))

    def __mul__(self, other: "ExtAffineElement") -> "ExtAffineElement":
        return compose(self, other)

    def inverse(self) -> "ExtAffineElement":
        winv = self.finite.inverse()
        lam = tuple(-a for a in winv(self.translation))
        return ExtAffineElement(self.datum, lam, winv)

    # -- alcove data -----------------------------------------------------------
    def pair(self, j: int) -> int:
        """<root_j, translation>."""
        return self.datum.pair_root(j, self.translation)

    def k(self, j: int) -> int:
        """Alcove coordinate of x(A_0) along positive root j."""
        return self.pair(j) - (1 if self.finite.inverse_perm[j] >= self.datum.n_pos else 0)

    @cached_property
    def alcove_coords(self) -> tuple:
        return tuple(self.k(j) for j in range(self.datum.n_pos))

    @cached_property
    def length(self) -> int:
        return sum(abs(c) for c in self.alcove_coords)

    def is_left_descent(self, i: int) -> bool:
        if i == 0:
            return self.k(self.datum.highest_index) >= 1
        return self.k(self.datum.simple_index[i]) < 0

    def left_descents(self) -> list:
        return [i for i in range(self.datum.rank + 1) if self.is_left_descent(i)]

    def is_right_descent(self, i: int) -> bool:
        return (self * simple_reflection(self.datum, i)).length < self.length

    def left_mul(self, i: int) -> "ExtAffineElement":
        """s_i * x for a simple affine reflection s_i."""
        d = self.datum
        if i == 0:
            j, k = d.highest_index, 1
        else:
            j, k = d.simple_index[i], 0
        c = self.pair(j) - k
        lam = self.translation
        if c:
            cv = d.coroot_ints[j]
            lam = tuple(a - c * b for a, b in zip(lam, cv))
        refl = d.reflection_perm(j)
        return ExtAffineElement(d, lam, FiniteWeylElement(d, tuple(refl[p] for p in self.finite.perm)))

    @cached_property
    def _word_and_omega(self) -> tuple:
        word = []
        x = self
        while True:
            i = next((i for i in range(self.datum.rank + 1) if x.is_left_descent(i)), None)
            if i is None:
                break
            word.append(i)
            x = x.left_mul(i)
        return tuple(word), x

    @property
    def canonical_word(self) -> tuple:
        """Lexicographically least reduced word of the W_aff-part."""
        return self._word_and_omega[0]

    @property
    def omega(self) -> "ExtAffineElement":
        """The length-zero element tau with x in W_aff * tau."""
        return self._word_and_omega[1]

    def in_waff(self) -> bool:
        return self.omega.is_identity()

    def is_identity(self) -> bool:
        return self.finite.is_identity() and not any(self.translation)

    def to_json(self) -> dict:
        om = self.omega
        return {
            "translation": list(self.translation),
            "finite_part_word": list(self.finite.word),
            "length": self.length,
            "omega": None if om.is_identity() else list(om.translation),
        }

    def sort_key(self) -> tuple:
        return (self.length, self.translation, self.finite.word)


# -- constructors ---------------------------------------------------------------

def identity(datum: RootDatum) -> ExtAffineElement:
    return ExtAffineElement(datum, (0,) * datum.ambient_dim, datum.identity)


def translation(datum: RootDatum, lam) -> ExtAffineElement:
    lam = vector(lam)
    if len(lam) != datum.ambient_dim:
        raise ConfigurationError(f"translation needs {datum.ambient_dim} coordinates")
    if not datum.in_lattice(lam):
        raise ConfigurationError(f"{list(lam)} is not in the cocharacter lattice of {datum.name}")
    return ExtAffineElement(datum, tuple(int(a) for a in lam), datum.identity)


def element(datum: RootDatum, lam, w: FiniteWeylElement) -> ExtAffineElement:
    return compose(translation(datum, lam), finite_element(w))


def finite_element(w: FiniteWeylElement) -> ExtAffineElement:
    return ExtAffineElement(w.datum, (0,) * w.datum.ambient_dim, w)


def simple_reflection(datum: RootDatum, i: int) -> ExtAffineElement:
    if not 0 <= i <= datum.rank:
        raise ConfigurationError(f"no simple affine reflection s_{i} in {datum.name}")
    return identity(datum).left_mul(i)


def affine_reflection(datum: RootDatum, j: int, k: int) -> ExtAffineElement:
    """s_{root_j, k} as an element: v -> v - (<root_j, v> - k) root_j^vee."""
    cv = datum.coroot_ints[j]
    return ExtAffineElement(datum, tuple(k * b for b in cv),
                            FiniteWeylElement(datum, datum.reflection_perm(j)))


def from_word(datum: RootDatum, word: Iterable[int], tail: ExtAffineElement | None = None) -> ExtAffineElement:
    x = tail if tail is not None else identity(datum)
    for i in reversed(list(word)):
        x = x.left_mul(i)
    return x


# -- module-level operations ------------------------------------------------------

def compose(x: ExtAffineElement, y: ExtAffineElement) -> ExtAffineElement:
    if x.datum is not y.datum and x.datum != y.datum:
        raise ConfigurationError("cannot compose elements of different root data")
    lam = tuple(a + b for a, b in zip(x.translation, x.finite(y.translation)))
    return ExtAffineElement(x.datum, tuple(int(a) for a in lam), x.finite * y.finite)


def length(x: ExtAffineElement) -> int:
    return x.length


def omega_decompose(x: ExtAffineElement) -> tuple:
    tau = x.omega
    return compose(x, tau.inverse()), tau


def reduced_word(x: ExtAffineElement) -> list:
    if not x.in_waff():
        raise ConfigurationError(f"{x!r} is not in W_aff; its Omega-part is {x.omega!r}")
    return list(x.canonical_word)


def alternate_reduced_word(x: ExtAffineElement) -> list:
    """Reduced word by greedy largest left descent (differs from the canonical one in general)."""
    word = []
    while True:
        ds = x.left_descents()
        if not ds:
            return word
        word.append(ds[-1])
        x = x.left_mul(ds[-1])


def bruhat_leq(x: ExtAffineElement, y: ExtAffineElement) -> bool:
    """Extended Bruhat order: same Omega-part and W_aff-parts comparable."""
    if x.datum != y.datum:
        raise ConfigurationError("cannot compare elements of different root data")
    if x.length > y.length:
        return False
    if x == y:
        return True
    d = x.datum
    memo = d.cache.setdefault("bruhat", {})
    key = (x, y)
    hit = memo.get(key)
    if hit is not None:
        return hit
    result = _bruhat(x, y)
    with d.lock:
        if len(memo) >= BRUHAT_MEMO_LIMIT:
            memo.clear()
        memo[key] = result
    return result


def _bruhat(x: ExtAffineElement, y: ExtAffineElement) -> bool:
    if x.omega != y.omega:
        return False
    # strip y letter by letter; replacing x by min(x, s x) preserves the answer
    for i in y.canonical_word:
        if x.is_left_descent(i):
            x = x.left_mul(i)
    return x == y.omega


def lower_interval(y: ExtAffineElement, guard: int = INTERVAL_LENGTH_GUARD, word=None) -> set:
    """{x : x <= y}, by subword closure of a reduced word of y."""
    if y.length > guard:
        raise GuardExceeded(f"length {y.length} exceeds interval guard {guard}")
    word = list(y.canonical_word) if word is None else list(word)
    if len(word) != y.length:
        raise ConfigurationError("word is not reduced for y")
    out = {y.omega}
    for i in reversed(word):
        out |= {z.left_mul(i) for z in out}
    return out


def minimal_in_finite_coset(x: ExtAffineElement) -> ExtAffineElement:
    """The minimal-length element of x * W_0."""
    d = x.datum
    changed = True
    while changed:
        changed = False
        for i in range(1, d.rank + 1):
            y = compose(x, simple_reflection(d, i))
            if y.length < x.length:
                x, changed = y, True
    return x
