"""Alcoves, walls and galleries; acute and obtuse cones; parabolic decompositions.

An alcove is stored by its integer coordinates: k_beta with
k_beta < <beta, p> < k_beta + 1 for interior points p, one per positive root.
"""
from __future__ import annotations

from dataclasses import dataclass, field
import math
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import affine, exact
from .affine import ExtAffineElement, compose, simple_reflection
from .errors import ConfigurationError, GuardExceeded
from .exact import dot, normalize, sub, vector
from .rootsys import FiniteWeylElement, RootDatum, enumerate_finite_weyl

STRONG_SET_GUARD = 2_000_000


@dataclass(frozen=True, order=True)
class Wall:
    """The hyperplane <root_j, v> = k for a positive root index j."""

    root: int
    k: int

    @staticmethod
    def normalized(datum: RootDatum, j: int, k: int) -> "Wall":
        """Identify H_{-alpha,-k} with H_{alpha,k}."""
        if j >= datum.n_pos:
            return Wall(j - datum.n_pos, -k)
        return Wall(j, k)

    def alpha(self, datum: RootDatum) -> tuple:
        return datum.roots[self.root]


@dataclass(frozen=True)
class Alcove:
    datum: RootDatum = field(compare=False, repr=False)
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.datum.n_pos:
            raise ConfigurationError("alcove needs one coordinate per positive root")

    @cached_property
    def element(self) -> ExtAffineElement:
        """The W_aff element x with x(A_0) equal to this alcove."""
        x = element_from_coords(self.datum, self.coords)
        if x is None:
            raise ConfigurationError(f"coordinates {self.coords} do not describe an alcove")
        return x

    def point(self, a) -> tuple:
        """Image of a base-alcove point a under the W_aff element carrying A_0 here."""
        return self.element(a)

    @cached_property
    def interior_point(self) -> tuple:
        return self.element(self.datum.barycenter)

    def contains(self, p) -> bool:
        d = self.datum
        return all(k < d.pair_root(j, p) < k + 1 for j, k in enumerate(self.coords))

    def neighbors(self) -> list:
        x = self.element
        return [alcove_of(compose(x, simple_reflection(self.datum, i)))
                for i in range(self.datum.rank + 1)]


@dataclass(frozen=True)
class Gallery:
    alcoves: tuple
    walls: tuple

    def __post_init__(self):
        if len(self.alcoves) != len(self.walls) + 1:
            raise ConfigurationError("a gallery has one more alcove than walls")
        for a, b, h in zip(self.alcoves, self.alcoves[1:], self.walls):
            if common_wall(a, b) != h:
                raise ConfigurationError(f"alcoves are not adjacent through {h}")

    def __len__(self):
        return len(self.walls)

    def reversed(self) -> "Gallery":
        return Gallery(tuple(reversed(self.alcoves)), tuple(reversed(self.walls)))

    def __add__(self, other: "Gallery") -> "Gallery":
        if self.alcoves[-1] != other.alcoves[0]:
            raise ConfigurationError("galleries do not meet")
        return Gallery(self.alcoves + other.alcoves[1:], self.walls + other.walls)


# -- coordinates ---------------------------------------------------------------

def _coroot_pairings(datum: RootDatum) -> tuple:
    """T[j][i] = <root_j, coroot_i> for all root indices."""
    key = ("root-coroot",)
    hit = datum.cache.get(key)
    if hit is None:
        n = len(datum.roots)
        hit = tuple(tuple(datum.pair_root(j, datum.coroot_ints[i]) for i in range(n)) for j in range(n))
        datum.cache[key] = hit
    return hit


def reflect_coords(datum: RootDatum, coords: Sequence[int], j: int, m: int) -> tuple:
    """Coordinates of s_{root_j, m}(A) given those of A."""
    n = datum.n_pos
    perm = datum.reflection_perm(j)
    table = _coroot_pairings(datum)
    out = []
    for b in range(n):
        g = perm[b]
        shift = m * table[b][j]
        out.append(coords[g] + shift if g < n else -coords[g - n] - 1 + shift)
    return tuple(out)


def element_from_coords(datum: RootDatum, coords: Sequence[int]) -> ExtAffineElement | None:
    """Reduce toward A_0 by walls of the current alcove; None when not realizable."""
    coords = tuple(coords)
    word = []
    size = sum(abs(c) for c in coords)
    hi = datum.highest_index
    while size:
        i = next((i for i in range(1, datum.rank + 1) if coords[datum.simple_index[i]] < 0), None)
        if i is not None:
            new = reflect_coords(datum, coords, datum.simple_index[i], 0)
        elif coords[hi] >= 1:
            i = 0
            new = reflect_coords(datum, coords, hi, 1)
        else:
            return None
        new_size = sum(abs(c) for c in new)
        if new_size != size - 1:
            return None
        word.append(i)
        coords, size = new, new_size
    return affine.from_word(datum, word)


def is_realizable(datum: RootDatum, coords: Sequence[int]) -> bool:
    return element_from_coords(datum, coords) is not None


def alcove_of(x: ExtAffineElement) -> Alcove:
    return Alcove(x.datum, x.alcove_coords)


def base_alcove(datum: RootDatum) -> Alcove:
    return Alcove(datum, (0,) * datum.n_pos)


def alcove_containing(datum: RootDatum, p) -> Alcove:
    """The alcove containing a point that lies on no wall."""
    coords = []
    for j in range(datum.n_pos):
        v = Fraction(datum.pair_root(j, p))
        if v.denominator == 1:
            raise ConfigurationError(f"{p} lies on a wall")
        coords.append(v.numerator // v.denominator)
    return Alcove(datum, tuple(coords))


def element_from_alcove(A: Alcove) -> ExtAffineElement:
    return A.element


# -- walls and galleries ---------------------------------------------------------

def separating_walls(A: Alcove, B: Alcove) -> set:
    out = set()
    for j, (a, b) in enumerate(zip(A.coords, B.coords)):
        lo, hi = min(a, b), max(a, b)
        out.update(Wall(j, m) for m in range(lo + 1, hi + 1))
    return out


def distance(A: Alcove, B: Alcove) -> int:
    return sum(abs(a - b) for a, b in zip(A.coords, B.coords))


def common_wall(A: Alcove, B: Alcove) -> Wall | None:
    diff = [(j, a, b) for j, (a, b) in enumerate(zip(A.coords, B.coords)) if a != b]
    if len(diff) != 1 or abs(diff[0][1] - diff[0][2]) != 1:
        return None
    j, a, b = diff[0]
    return Wall(j, max(a, b))


def minimal_gallery(A: Alcove, B: Alcove) -> Gallery:
    """Walk from A to B, each time crossing the least (root, k) wall that gets closer."""
    alcoves, walls = [A], []
    cur = A
    dist = distance(A, B)
    while dist:
        best = None
        for C in cur.neighbors():
            if distance(C, B) == dist - 1:
                h = common_wall(cur, C)
                if best is None or h < best[0]:
                    best = (h, C)
        h, cur = best
        alcoves.append(cur)
        walls.append(h)
        dist -= 1
    return Gallery(tuple(alcoves), tuple(walls))


def all_minimal_galleries(A: Alcove, B: Alcove, limit: int = 10_000) -> list:
    out = []

    def walk(path, walls):
        if len(out) > limit:
            raise GuardExceeded("too many minimal galleries")
        cur = path[-1]
        d = distance(cur, B)
        if d == 0:
            out.append(Gallery(tuple(path), tuple(walls)))
            return
        for C in cur.neighbors():
            if distance(C, B) == d - 1:
                walk(path + [C], walls + [common_wall(cur, C)])

    walk([A], [])
    return out


def gallery_from_word(start: ExtAffineElement, word: Iterable[int]) -> Gallery:
    """The gallery x(A_0), x s_{i1}(A_0), x s_{i1} s_{i2}(A_0), ..."""
    x = start
    alcoves = [alcove_of(x)]
    walls = []
    for i in word:
        x = compose(x, simple_reflection(x.datum, i))
        nxt = alcove_of(x)
        walls.append(common_wall(alcoves[-1], nxt))
        alcoves.append(nxt)
    return Gallery(tuple(alcoves), tuple(walls))


def is_minimal(g: Gallery) -> bool:
    return len(set(g.walls)) == len(g.walls)


def _in_w_positive(w: FiniteWeylElement, j: int) -> bool:
    """True when positive root j lies in w(R+)."""
    return w.inverse_perm[j] < w.datum.n_pos


def in_w_direction(g: Gallery, w: FiniteWeylElement) -> bool:
    for a, b, h in zip(g.alcoves, g.alcoves[1:], g.walls):
        increasing = b.coords[h.root] > a.coords[h.root]
        if increasing != _in_w_positive(w, h.root):
            return False
    return True


def in_acute_cone(A: Alcove, w: FiniteWeylElement, B: Alcove) -> bool:
    for j, (a, b) in enumerate(zip(A.coords, B.coords)):
        if a != b and (b > a) != _in_w_positive(w, j):
            return False
    return True


def find_direction(A: Alcove, B: Alcove) -> FiniteWeylElement:
    for w in enumerate_finite_weyl(A.datum):
        if in_acute_cone(A, w, B):
            return w
    raise AssertionError("every pair of alcoves has a direction")


def _check_interior(datum: RootDatum, a) -> None:
    if not all(0 < datum.pair_root(j, a) < 1 for j in range(datum.n_pos)):
        raise ConfigurationError(f"{list(a)} is not in the open base alcove")


def pointed_cone_member(a, A: Alcove, w: FiniteWeylElement, B: Alcove) -> bool:
    d = A.datum
    a = vector(a)
    _check_interior(d, a)
    diff = w.inverse()(sub(B.point(a), A.point(a)))
    return all(dot(alpha, diff) >= 0 for alpha in d.simple_roots)


def obtuse_member(datum: RootDatum, v1, v0, w: FiniteWeylElement) -> bool:
    """v1 - v0 lies in w(B_0): a nonpositive combination of the w(simple coroots)."""
    diff = w.inverse()(sub(vector(v1), vector(v0)))
    if not datum.in_root_span(diff):
        return False
    return all(c <= 0 for c in datum.simple_coroot_coords(diff))


# -- the sets B(v, w) ----------------------------------------------------------

@dataclass(frozen=True)
class Window:
    """A box in simple-coroot coordinates relative to the start point, in the w^{-1}-frame.

    Every step of a w(B_0)-path lowers these coordinates, so a path that ends in the
    box never leaves it: the box is saturated and the search inside it is complete.
    """

    lower: tuple

    @staticmethod
    def covering(datum: RootDatum, v, w: FiniteWeylElement, points: Iterable) -> "Window":
        """Smallest box holding every given point that lies in v + w(B_0)."""
        winv = w.inverse()
        base = winv(v)
        low = [0] * datum.rank
        for p in points:
            c = datum.simple_coroot_coords(sub(winv(p), base))
            if all(x <= 0 for x in c) and datum.in_root_span(sub(p, v)):
                low = [min(a, b) for a, b in zip(low, c)]
        return Window(tuple(low))


def _frame_scale(datum: RootDatum, u) -> int:
    """A denominator clearing u and every root pairing along its W_aff-orbit."""
    d = exact.common_denominator([u])
    for j in range(datum.n_pos):
        q = Fraction(datum.pair_root(j, u)).denominator
        d = d * q // math.gcd(d, q)
    return d


def strong_frame(datum: RootDatum, v, w: FiniteWeylElement, window: Window,
                 guard: int = STRONG_SET_GUARD) -> tuple:
    """(D, points): B(v, w) in the window, as D * w^{-1}(p) with integer entries."""
    if len(window.lower) != datum.rank or any(c > 0 for c in window.lower):
        raise ConfigurationError("window must be a box of nonpositive lower bounds containing v")
    start = w.inverse()(vector(v))
    D = _frame_scale(datum, start)
    lower = [math.ceil(Fraction(c) * D) for c in window.lower]
    steps = []
    for j in range(datum.n_pos):
        num, den = datum._root_ints[j]
        cc = tuple(int(c) for c in datum.simple_coroot_coords(datum.coroot_ints[j]))
        steps.append((num, den, datum.coroot_ints[j],
                      [(i, k) for i, k in enumerate(cc) if k], cc))
    s0 = tuple(int(a * D) for a in start)
    c0 = (0,) * datum.rank
    seen = {s0}
    frontier = [(s0, c0)]
    while frontier:
        nxt = []
        for u, c in frontier:
            for num, den, cv, support, cc in steps:
                room = min((c[i] - lower[i]) // k for i, k in support)
                if room <= 0:
                    continue
                p = sum(a * b for a, b in zip(num, u)) // den
                m = p % D or D
                while m <= room:
                    u2 = tuple(a - m * b for a, b in zip(u, cv))
                    if u2 not in seen:
                        seen.add(u2)
                        nxt.append((u2, tuple(a - m * b for a, b in zip(c, cc))))
                        if len(seen) > guard:
                            raise GuardExceeded("strong_set exceeded its point budget")
                    m += D
        frontier = nxt
    return D, seen


def strong_set(datum: RootDatum, v, w: FiniteWeylElement, window: Window,
               guard: int = STRONG_SET_GUARD) -> set:
    """Points of B(v, w) inside the window, by closure under admissible reflections.

    Works in the w^{-1}-frame, where the admissible steps are u -> u - m beta^vee
    for positive roots beta and m > 0 with <beta, u> - m an integer.
    """
    D, pts = strong_frame(datum, v, w, window, guard)
    return {w(tuple(normalize(Fraction(a, D)) for a in u)) for u in pts}


# -- parabolic decomposition -------------------------------------------------------

def vertex_stabilizer(datum: RootDatum, a) -> frozenset:
    """J_a: the simple affine reflections fixing the base-alcove point a."""
    out = {i for i in range(1, datum.rank + 1) if dot(datum.simple_roots[i - 1], a) == 0}
    if dot(datum.highest_root, a) == 1:
        out.add(0)
    return frozenset(out)


def vertex_stabilizers(datum: RootDatum) -> list:
    return [vertex_stabilizer(datum, a) for a in datum.base_alcove_vertices]


def parabolic_decompose(x: ExtAffineElement, J: Iterable[int]) -> tuple:
    """x = x^J x_J with x^J minimal in x W_J and x_J in W_J."""
    d = x.datum
    J = sorted(set(J))
    if any(not 0 <= i <= d.rank for i in J):
        raise ConfigurationError("J must be a subset of 0..rank")
    if len(J) == d.rank + 1:
        raise ConfigurationError("W_J is infinite when J contains every simple affine reflection")
    if not x.in_waff():
        raise ConfigurationError("parabolic_decompose expects an element of W_aff")
    gens = {i: simple_reflection(d, i) for i in J}
    xm = x
    changed = True
    while changed:
        changed = False
        for i in J:
            y = compose(xm, gens[i])
            if y.length < xm.length:
                xm, changed = y, True
                break
    return xm, compose(xm.inverse(), x)
