"""Based root data in exact rational coordinates.

A datum lives in an ambient space Q^d.  Roots and coroots are vectors there and
every pairing is the standard dot product.  Each family is realized so that the
cocharacter lattice and all coroots are integral, which lets translation parts of
affine Weyl group elements be plain integer tuples.

Finite Weyl group elements are stored as permutations of the root list; the root
list is faithful for the action, and the permutation gives lengths, descents and
products in integer arithmetic.
"""
from __future__ import annotations

import hashlib
import json
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import exact
from .errors import ConfigurationError, ConsistencyError, GuardExceeded
from .exact import dot, normalize, sub, vector

FAMILIES = ("GL", "A", "B", "C", "D", "F", "G", "GSp")
MAX_RANK = 8
WEYL_GROUP_GUARD = 10 ** 6


def _e(d: int, *entries: tuple[int, object]) -> tuple:
    v = [0] * d
    for i, c in entries:
        v[i] += Fraction(c)
    return vector(v)


@dataclass(frozen=True, eq=False)
class RootDatum:
    """A reduced irreducible based root datum.

    ``simple_roots`` fixes the base; everything else (positive roots, coroots,
    highest root, alcove vertices) is derived.  ``lattice_basis`` is a Z-basis of
    the cocharacter lattice X_*; ``vertex_override`` replaces the default
    base-alcove vertex representatives (used for GL and GSp, whose alcoves are
    not bounded along the center).
    """

    family: str
    size: int
    simple_roots: tuple
    lattice_basis: tuple
    vertex_override: tuple | None = None
    label: str = ""

    def __reduce__(self):
        return (RootDatum, (self.family, self.size, self.simple_roots,
                            self.lattice_basis, self.vertex_override, self.label))

    def __eq__(self, other):
        if not isinstance(other, RootDatum):
            return NotImplemented
        return self._identity == other._identity

    def __hash__(self):
        return hash(self._identity)

    def __repr__(self):
        return f"RootDatum({self.name})"

    @cached_property
    def _identity(self):
        return (self.family, self.size, self.simple_roots, self.lattice_basis,
                self.base_alcove_vertices)

    @property
    def name(self) -> str:
        return self.label or f"{self.family}{self.size}"

    # -- basic shape -------------------------------------------------------
    @cached_property
    def ambient_dim(self) -> int:
        return len(self.simple_roots[0])

    @cached_property
    def rank(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def cache(self) -> dict:
        return {}

    @cached_property
    def lock(self) -> threading.Lock:
        return threading.Lock()

    @staticmethod
    def coroot_of(alpha: Sequence) -> tuple:
        n = dot(alpha, alpha)
        return tuple(normalize(Fraction(2 * a) / n) for a in alpha)

    @cached_property
    def simple_coroots(self) -> tuple:
        return tuple(self.coroot_of(a) for a in self.simple_roots)

    @cached_property
    def cartan_pairings(self) -> tuple:
        """P[i][j] = <alpha_i, alpha_j^vee>."""
        return tuple(tuple(dot(a, c) for c in self.simple_coroots) for a in self.simple_roots)

    @cached_property
    def fundamental_coweights(self) -> tuple:
        """Vectors in the coroot span with <alpha_j, w_i> = delta_ij."""
        p = self.cartan_pairings
        # coefficients in the simple coroots form the inverse of the transposed Cartan pairing
        rows = exact.inverse([[p[j][k] for j in range(self.rank)] for k in range(self.rank)])
        return tuple(self._combine(rows[i], self.simple_coroots) for i in range(self.rank))

    @cached_property
    def fundamental_weights(self) -> tuple:
        """Functionals in the root span with <w_i, alpha_j^vee> = delta_ij."""
        b = exact.inverse(self.cartan_pairings)
        return tuple(self._combine(b[i], self.simple_roots) for i in range(self.rank))

    def _combine(self, coeffs, vectors) -> tuple:
        out = [0] * self.ambient_dim
        for c, v in zip(coeffs, vectors):
            for k in range(self.ambient_dim):
                out[k] += c * v[k]
        return vector(out)

    def simple_root_coords(self, v) -> tuple:
        """Coefficients of ``v`` (in the root span) in the simple roots."""
        return tuple(dot(v, w) for w in self.fundamental_coweights)

    def simple_coroot_coords(self, v) -> tuple:
        """Coefficients of ``v`` (in the coroot span) in the simple coroots."""
        return tuple(dot(w, v) for w in self.fundamental_weights)

    @cached_property
    def center_basis(self) -> list:
        """Basis of the common kernel of all roots."""
        return exact.nullspace(self.simple_roots, self.ambient_dim)

    def in_root_span(self, v) -> bool:
        return all(dot(z, v) == 0 for z in self.center_basis)

    # -- roots -------------------------------------------------------------
    @cached_property
    def positive_roots(self) -> tuple:
        seen = set(self.simple_roots)
        queue = list(self.simple_roots)
        while queue:
            beta = queue.pop()
            for i, alpha in enumerate(self.simple_roots):
                if beta == alpha:
                    continue
                gamma = sub(beta, exact.scale(dot(beta, self.simple_coroots[i]), alpha))
                if gamma not in seen:
                    seen.add(gamma)
                    queue.append(gamma)
        if len(seen) > 200:
            raise GuardExceeded("root system too large")

        def key(b):
            c = self.simple_root_coords(b)
            return (sum(c), c)

        roots = sorted(seen, key=key)
        for b in roots:
            c = self.simple_root_coords(b)
            if any(x < 0 for x in c) or not all(Fraction(x).denominator == 1 for x in c):
                raise ConsistencyError(f"root {b} is not a nonnegative integral combination")
        return tuple(roots)

    @cached_property
    def n_pos(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def roots(self) -> tuple:
        """Positive roots followed by their negatives, in the same order."""
        return self.positive_roots + tuple(tuple(-a for a in b) for b in self.positive_roots)

    @cached_property
    def coroots(self) -> tuple:
        return tuple(self.coroot_of(b) for b in self.roots)

    @cached_property
    def root_index(self) -> dict:
        return {b: i for i, b in enumerate(self.roots)}

    @cached_property
    def simple_index(self) -> tuple:
        """Position of alpha_i (i = 1..rank) in ``roots``; entry 0 is unused."""
        return (None,) + tuple(self.root_index[a] for a in self.simple_roots)

    @cached_property
    def highest_root(self) -> tuple:
        return self.positive_roots[-1]

    @cached_property
    def highest_index(self) -> int:
        return self.n_pos - 1

    @cached_property
    def highest_root_coefficients(self) -> tuple:
        return self.simple_root_coords(self.highest_root)

    def negate_index(self, j: int) -> int:
        return j + self.n_pos if j < self.n_pos else j - self.n_pos

    @cached_property
    def _root_ints(self) -> tuple:
        """(numerator vector, denominator) per root, for integer pairings."""
        out = []
        for b in self.roots:
            d = exact.common_denominator([b])
            out.append((tuple(int(a * d) for a in b), d))
        return tuple(out)

    def pair_root(self, j: int, v) -> object:
        """<root_j, v> exactly; an int whenever the value is integral."""
        num, den = self._root_ints[j]
        s = sum(a * b for a, b in zip(num, v))
        if isinstance(s, int):
            return s // den if s % den == 0 else Fraction(s, den)
        return normalize(s / den)

    @cached_property
    def coroot_ints(self) -> tuple:
        for c in self.coroots:
            if not exact.is_integral(c):
                raise ConsistencyError("coroots must be integral in this realization")
        return tuple(tuple(int(a) for a in c) for c in self.coroots)

    # -- reflections as root permutations ---------------------------------
    def reflection_perm(self, j: int) -> tuple:
        key = ("refl", j)
        perm = self.cache.get(key)
        if perm is None:
            alpha, coroot = self.roots[j], self.coroots[j]
            perm = tuple(self.root_index[sub(b, exact.scale(dot(b, coroot), alpha))]
                         for b in self.roots)
            self.cache[key] = perm
        return perm

    @cached_property
    def simple_perms(self) -> tuple:
        return (None,) + tuple(self.reflection_perm(self.simple_index[i])
                               for i in range(1, self.rank + 1))

    @cached_property
    def identity_perm(self) -> tuple:
        return tuple(range(len(self.roots)))

    # -- lattice and alcove --------------------------------------------------
    def in_lattice(self, v) -> bool:
        if not exact.is_integral(v):
            return False
        c = exact.solve_in_span(self.lattice_basis, v)
        return c is not None and exact.is_integral(c)

    def in_coroot_lattice(self, v) -> bool:
        if not self.in_root_span(v):
            return False
        return exact.is_integral(self.simple_coroot_coords(v))

    def in_coweight_lattice(self, v) -> bool:
        return all(Fraction(dot(a, v)).denominator == 1 for a in self.simple_roots) \
            and self.in_root_span(v)

    @cached_property
    def base_alcove_vertices(self) -> tuple:
        if self.vertex_override is not None:
            return tuple(vector(v) for v in self.vertex_override)
        zero = vector([0] * self.ambient_dim)
        coeffs = self.highest_root_coefficients
        return (zero,) + tuple(exact.scale(Fraction(1, c), w)
                               for c, w in zip(coeffs, self.fundamental_coweights))

    @cached_property
    def barycenter(self) -> tuple:
        """Barycenter of the base-alcove vertices, projected into the root span."""
        verts = [self.project_to_root_span(v) for v in self.base_alcove_vertices]
        n = len(verts)
        return tuple(normalize(sum(v[k] for v in verts) / Fraction(n)) for k in range(self.ambient_dim))

    def project_to_root_span(self, v) -> tuple:
        return self._combine(self.simple_coroot_coords_real(v), self.simple_coroots)

    def simple_coroot_coords_real(self, v) -> tuple:
        # valid for any v: pairing with fundamental weights ignores the center
        return tuple(dot(w, v) for w in self.fundamental_weights)

    def is_dominant(self, v) -> bool:
        return all(dot(a, v) >= 0 for a in self.simple_roots)

    def is_regular(self, v) -> bool:
        return all(dot(a, v) != 0 for a in self.simple_roots)

    @cached_property
    def fingerprint(self) -> str:
        payload = json.dumps([self.family, self.size, _encode_vectors(self.roots),
                              _encode_vectors(self.coroots)], separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "size": self.size,
            "name": self.name,
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "simple_roots": _encode_vectors(self.simple_roots),
            "simple_coroots": _encode_vectors(self.simple_coroots),
            "positive_roots": _encode_vectors(self.positive_roots),
            "highest_root": _encode_vectors([self.highest_root])[0],
            "cocharacter_lattice_basis": [list(b) for b in self.lattice_basis],
            "base_alcove_vertices": _encode_vectors(self.base_alcove_vertices),
            "fingerprint": self.fingerprint,
        }

    # -- identity of the finite Weyl group --------------------------------
    @cached_property
    def identity(self) -> "FiniteWeylElement":
        return FiniteWeylElement(self, self.identity_perm)

    def s(self, i: int) -> "FiniteWeylElement":
        return FiniteWeylElement(self, self.simple_perms[i])

    def reflection(self, alpha) -> "FiniteWeylElement":
        j = self.root_index.get(vector(alpha))
        if j is None:
            raise ConfigurationError(f"{alpha} is not a root of {self.name}")
        return FiniteWeylElement(self, self.reflection_perm(j))

    def weyl_from_word(self, word: Iterable[int]) -> "FiniteWeylElement":
        w = self.identity
        for i in word:
            w = w * self.s(i)
        return w


def _encode_vectors(vs) -> list:
    return [[[Fraction(a).numerator, Fraction(a).denominator] for a in v] for v in vs]


@dataclass(frozen=True)
class FiniteWeylElement:
    """An element of W_0, stored as the permutation it induces on ``datum.roots``."""

    datum: RootDatum = field(compare=False, repr=False)
    perm: tuple

    def __repr__(self):
        return f"W0{list(self.word)}"

    @cached_property
    def inverse_perm(self) -> tuple:
        inv = [0] * len(self.perm)
        for j, k in enumerate(self.perm):
            inv[k] = j
        return tuple(inv)

    def inverse(self) -> "FiniteWeylElement":
        return FiniteWeylElement(self.datum, self.inverse_perm)

    def __mul__(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        p = self.perm
        return FiniteWeylElement(self.datum, tuple(p[k] for k in other.perm))

    @cached_property
    def length(self) -> int:
        n = self.datum.n_pos
        return sum(1 for k in self.perm[:n] if k >= n)

    def is_left_descent(self, i: int) -> bool:
        return self.inverse_perm[self.datum.simple_index[i]] >= self.datum.n_pos

    def is_right_descent(self, i: int) -> bool:
        return self.perm[self.datum.simple_index[i]] >= self.datum.n_pos

    @cached_property
    def word(self) -> tuple:
        """Lexicographically least reduced word (greedy smallest left descent)."""
        cache = self.datum.cache
        key = ("word", self.perm)
        hit = cache.get(key)
        if hit is not None:
            return hit
        out = []
        w = self
        while w.length:
            i = next(i for i in range(1, self.datum.rank + 1) if w.is_left_descent(i))
            out.append(i)
            w = self.datum.s(i) * w
        cache[key] = tuple(out)
        return tuple(out)

    def sends_negative(self, j: int) -> bool:
        """True when this element maps root j to a negative root."""
        return self.perm[j] >= self.datum.n_pos

    def _apply_word(self, v) -> tuple:
        d = self.datum
        out = tuple(v)
        for i in reversed(self.word):
            j = d.simple_index[i]
            p = d.pair_root(j, out)
            if p:
                c = d.coroot_ints[j]
                out = tuple(normalize(a - p * b) for a, b in zip(out, c))
        return out

    @cached_property
    def matrix(self) -> tuple:
        """(rows, q): the action is v -> rows . v / q with integer rows."""
        d = self.datum
        key = ("matrix", self.perm)
        hit = d.cache.get(key)
        if hit is None:
            n = d.ambient_dim
            cols = [self._apply_word(tuple(1 if k == l else 0 for k in range(n))) for l in range(n)]
            q = exact.common_denominator(cols)
            rows = tuple(tuple(int(cols[l][k] * q) for l in range(n)) for k in range(n))
            hit = (rows, q)
            d.cache[key] = hit
        return hit

    def __call__(self, v) -> tuple:
        rows, q = self.matrix
        out = []
        for r in rows:
            s = sum(a * b for a, b in zip(r, v))
            if isinstance(s, int):
                out.append(s // q if s % q == 0 else Fraction(s, q))
            else:
                out.append(normalize(s / q))
        return tuple(out)

    def apply_root(self, j: int) -> int:
        return self.perm[j]

    def is_identity(self) -> bool:
        return self.perm == self.datum.identity_perm


# -- family constructors ---------------------------------------------------

def _type_a_simple(n: int) -> tuple:
    return tuple(_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1))


def _unit_basis(n: int) -> tuple:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _omega(i: int, n: int) -> tuple:
    return vector([1] * i + [0] * (n - i))


def build_root_datum(family: str, size: int) -> RootDatum:
    """Construct one of the supported based root data.

    ``size`` means: GL(n) -> n; A -> rank; B/C/D -> rank; F -> 4; G -> 2;
    GSp -> 2n (the matrix size, so ``build_root_datum("GSp", 4)`` is GSp(4)).
    """
    fam = _normalize_family(family)
    if not isinstance(size, int) or size < 1:
        raise ConfigurationError(f"size must be a positive integer, got {size!r}")
    if fam == "GL":
        n = size
        if not 2 <= n <= MAX_RANK + 1:
            raise ConfigurationError("GL(n) needs 2 <= n <= 9")
        verts = (vector([0] * n),) + tuple(_omega(i, n) for i in range(1, n))
        return RootDatum("GL", n, _type_a_simple(n), _unit_basis(n), verts, f"GL({n})")
    if fam == "A":
        k = size
        if not 1 <= k <= MAX_RANK:
            raise ConfigurationError("A_k needs 1 <= k <= 8")
        n = k + 1
        basis = tuple(tuple(1 if j == i else (-1 if j == i + 1 else 0) for j in range(n))
                      for i in range(k))
        return RootDatum("A", k, _type_a_simple(n), basis, None, f"A{k}")
    if fam in ("B", "C", "D"):
        n = size
        lo = {"B": 2, "C": 2, "D": 3}[fam]
        if not lo <= n <= MAX_RANK:
            raise ConfigurationError(f"{fam}_n needs {lo} <= n <= 8")
        simple = list(_type_a_simple(n))
        if fam == "B":
            simple.append(_e(n, (n - 1, 1)))
        elif fam == "C":
            simple.append(_e(n, (n - 1, 2)))
        else:
            simple.append(_e(n, (n - 2, 1), (n - 1, 1)))
        return RootDatum(fam, n, tuple(simple), _unit_basis(n), None, f"{fam}{n}")
    if fam == "F":
        if size != 4:
            raise ConfigurationError("F only exists in rank 4")
        h = Fraction(1, 2)
        simple = (_e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)),
                  _e(4, (0, h), (1, -h), (2, -h), (3, -h)))
        basis = ((1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 1, 1))
        return RootDatum("F", 4, simple, basis, None, "F4")
    if fam == "G":
        if size != 2:
            raise ConfigurationError("G only exists in rank 2")
        t = Fraction(1, 3)
        # short simple root first; coroots come out integral in this scaling
        simple = (_e(3, (0, t), (1, -2 * t), (2, t)), _e(3, (0, -1), (1, 1)))
        basis = ((1, -1, 0), (0, 1, -1))
        return RootDatum("G", 2, simple, basis, None, "G2")
    if fam == "GSp":
        if size % 2 or not 2 <= size <= MAX_RANK:
            raise ConfigurationError("GSp(2n) needs an even size 2..8")
        return _gsp(size // 2)
    raise ConfigurationError(f"unsupported family {family!r}")


def _normalize_family(family: str) -> str:
    f = str(family).strip()
    table = {x.upper(): x for x in FAMILIES}
    if f.upper() not in table:
        raise ConfigurationError(f"unsupported family {family!r}; choose from {', '.join(FAMILIES)}")
    return table[f.upper()]


def _gsp(n: int) -> RootDatum:
    """GSp(2n) in the GL(2n) coordinates (x_1..x_n, y_n..y_1)."""
    m = 2 * n
    h = Fraction(1, 2)
    simple = [_e(m, (i, h), (i + 1, -h), (m - i - 2, h), (m - i - 1, -h)) for i in range(n - 1)]
    simple.append(_e(m, (n - 1, 1), (n, -1)))
    basis = [tuple(1 if j == i else (-1 if j == m - 1 - i else 0) for j in range(m))
             for i in range(n)]
    basis.append(tuple([0] * n + [1] * n))
    verts = [vector([0] * m)]
    for i in range(1, n + 1):
        verts.append(exact.scale(h, exact.add(_omega(i, m), _omega(m - i, m))))
    return RootDatum("GSp", m, tuple(simple), tuple(basis), tuple(verts), f"GSp({m})")


# -- module-level operations --------------------------------------------------

def pairing(datum: RootDatum, functional, point):
    if len(functional) != datum.ambient_dim or len(point) != datum.ambient_dim:
        raise ConfigurationError("dimension mismatch")
    return dot(vector(functional), vector(point))


def affine_reflect(datum: RootDatum, alpha, k: int, v) -> tuple:
    """s_{alpha,k}(v) = v - (<alpha, v> - k) alpha^vee."""
    alpha = vector(alpha)
    if alpha not in datum.root_index:
        raise ConfigurationError(f"{alpha} is not a root of {datum.name}")
    v = vector(v)
    c = dot(alpha, v) - k
    return sub(v, exact.scale(c, datum.coroot_of(alpha)))


def enumerate_finite_weyl(datum: RootDatum, guard: int = WEYL_GROUP_GUARD) -> tuple:
    """All of W_0 in shortlex order of canonical reduced words."""
    key = ("W0",)
    hit = datum.cache.get(key)
    if hit is not None:
        return hit
    seen = {datum.identity_perm}
    frontier = [datum.identity_perm]
    gens = datum.simple_perms[1:]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[k] for k in p)
                if q not in seen:
                    seen.add(q)
                    if len(seen) > guard:
                        raise GuardExceeded(f"|W0| exceeds guard {guard}")
                    nxt.append(q)
        frontier = nxt
    elements = [FiniteWeylElement(datum, p) for p in seen]
    elements.sort(key=lambda w: (w.length, w.word))
    out = tuple(elements)
    datum.cache[key] = out
    return out


def longest_element(datum: RootDatum) -> FiniteWeylElement:
    """w_0, found by descending into the antidominant chamber."""
    return dominant_representative(datum, tuple(-a for a in datum.barycenter))[1].inverse()


def dominant_representative(datum: RootDatum, v) -> tuple:
    """(v_plus, w) with v_plus = w(v) dominant."""
    u = vector(v)
    w = datum.identity
    moved = True
    while moved:
        moved = False
        for i in range(1, datum.rank + 1):
            j = datum.simple_index[i]
            p = datum.pair_root(j, u)
            if p < 0:
                c = datum.coroot_ints[j]
                u = tuple(normalize(a - p * b) for a, b in zip(u, c))
                w = datum.s(i) * w
                moved = True
                break
    return u, w


def weyl_orbit(datum: RootDatum, v) -> list:
    """The W_0-orbit of v, without enumerating W_0."""
    v = vector(v)
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for i in range(1, datum.rank + 1):
                j = datum.simple_index[i]
                p = datum.pair_root(j, u)
                if p:
                    c = datum.coroot_ints[j]
                    x = tuple(normalize(a - p * b) for a, b in zip(u, c))
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
        frontier = nxt
    return sorted(seen)


def dominance_leq(datum: RootDatum, a, b) -> bool:
    """a <= b: b - a is a nonnegative real combination of simple coroots."""
    diff = sub(vector(b), vector(a))
    if not datum.in_root_span(diff):
        return False
    return all(c >= 0 for c in datum.simple_coroot_coords(diff))


def require_dominant(datum: RootDatum, mu) -> tuple:
    mu = vector(mu)
    if len(mu) != datum.ambient_dim:
        raise ConfigurationError(f"mu needs {datum.ambient_dim} coordinates, got {len(mu)}")
    bad = [i + 1 for i, a in enumerate(datum.simple_roots) if dot(a, mu) < 0]
    if bad:
        raise ConfigurationError(f"mu={list(mu)} is not dominant: <alpha_{bad[0]}, mu> < 0")
    return mu


def conv_membership(datum: RootDatum, mu, v) -> bool:
    """v in Conv(W_0 mu), tested as the intersection over w of w mu + w(B_0)."""
    mu = require_dominant(datum, mu)
    v = vector(v)
    for w in enumerate_finite_weyl(datum):
        # w^{-1}(v - w mu) = w^{-1} v - mu must be a nonpositive coroot combination
        d = sub(w.inverse()(v), mu)
        if not datum.in_root_span(d):
            return False
        if any(c > 0 for c in datum.simple_coroot_coords(d)):
            return False
    return True


class WeylPolytope:
    """Conv(W_0 mu) with a fast facet-inequality membership test.

    The facets are <w varpi_i, p> <= <varpi_i, mu> over the orbits of the
    fundamental weights, together with the affine-span equations; this agrees
    with :func:`conv_membership` (checked in the test-suite).
    """

    def __init__(self, datum: RootDatum, mu):
        self.datum = datum
        self.mu = require_dominant(datum, mu)
        normals = []
        for i, wt in enumerate(datum.fundamental_weights):
            bound = dot(wt, self.mu)
            for nu in weyl_orbit(datum, wt):
                normals.append((nu, bound))
        den = exact.common_denominator([n for n, _ in normals])
        self._facets = [(tuple(int(a * den) for a in n), int(b * den)) for n, b in normals]
        self._center = []
        for z in datum.center_basis:
            q = exact.common_denominator([z])
            zi = tuple(int(a * q) for a in z)
            self._center.append((zi, int(dot(zi, self.mu))))

    def contains(self, p) -> bool:
        q = exact.common_denominator([p])
        return self.contains_scaled(tuple(int(a * q) for a in p), q)

    def contains_scaled(self, p, q: int = 1) -> bool:
        """Membership of p / q for an integer vector p."""
        for z, c in self._center:
            if sum(a * x for a, x in zip(z, p)) != c * q:
                return False
        for n, b in self._facets:
            if sum(a * x for a, x in zip(n, p)) > b * q:
                return False
        return True

    __contains__ = contains

    @cached_property
    def orbit(self) -> list:
        return weyl_orbit(self.datum, self.mu)

    @cached_property
    def dominant_points(self) -> list:
        """Dominant lam <= mu with lam - mu in the coroot lattice."""
        d = self.datum
        pos_coroots = [d.coroot_ints[j] for j in range(d.n_pos)]
        seen = {self.mu}
        frontier = [self.mu]
        while frontier:
            nxt = []
            for nu in frontier:
                for c in pos_coroots:
                    cand, _ = dominant_representative(d, sub(nu, c))
                    if cand not in seen and dominance_leq(d, cand, self.mu):
                        seen.add(cand)
                        nxt.append(cand)
            frontier = nxt
        return sorted(seen)

    @cached_property
    def lattice_points(self) -> list:
        """Conv(mu) intersected with mu + coroot lattice, as a union of W_0-orbits."""
        pts = set()
        for lam in self.dominant_points:
            pts.update(weyl_orbit(self.datum, lam))
        return sorted(pts)
