"""Named executable checks of the structural statements this library relies on.

Each check takes a ``Params`` and returns a ``Verdict``.  The CLI's ``verify``
command and the test-suite both run through this registry.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import __version__, affine, alcoves, musets, steinberg
from .affine import ExtAffineElement, bruhat_leq, compose, finite_element, translation
from .alcoves import (Alcove, alcove_of, base_alcove, in_acute_cone, in_w_direction, is_minimal)
from .errors import ConfigurationError
from .exact import add, dot, sub, vector
from .rootsys import (RootDatum, WeylPolytope, build_root_datum, conv_membership,
                      dominance_leq, dominant_representative, enumerate_finite_weyl, longest_element, weyl_orbit)

SCHEMA = "verdict/1"


@dataclass
class Params:
    family: str | None = None
    size: int | None = None
    mu: tuple | None = None
    radius: int = 4
    samples: int = 200
    seed: int = 0

    def datum(self, family: str, size: int) -> RootDatum:
        return build_root_datum(self.family or family, self.size if self.size is not None else size)


@dataclass
class Verdict:
    statement: str
    datum: str
    parameters: dict
    passed: bool
    checked: int = 0
    witness: object = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"schema": SCHEMA, "version": __version__, **asdict(self)}
        out["witness"] = _encode(self.witness)
        out["details"] = _encode(self.details)
        return out


def _encode(obj):
    if isinstance(obj, ExtAffineElement):
        return obj.to_json()
    if isinstance(obj, Alcove):
        return list(obj.coords)
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "word"):
        return list(obj.word)
    return obj


def _params_dict(p: Params) -> dict:
    d = asdict(p)
    if d["mu"] is not None:
        d["mu"] = list(d["mu"])
    return d


# -- random material ---------------------------------------------------------------

def random_element(datum: RootDatum, rng: random.Random, max_length: int) -> ExtAffineElement:
    n = rng.randint(0, max_length)
    return affine.from_word(datum, [rng.randint(0, datum.rank) for _ in range(n)])


def random_alcove(datum, rng, max_length) -> Alcove:
    return alcove_of(random_element(datum, rng, max_length))


def random_interior_point(datum: RootDatum, rng: random.Random) -> tuple:
    """A random rational point of the open base alcove (convex combination of vertices)."""
    verts = [datum.project_to_root_span(a) for a in datum.base_alcove_vertices]
    weights = [Fraction(rng.randint(1, 20)) for _ in verts]
    total = sum(weights)
    return vector(sum(w * v[k] for w, v in zip(weights, verts)) / total
                  for k in range(datum.ambient_dim))


def random_lattice_point(datum: RootDatum, rng: random.Random, lo: int, hi: int) -> tuple:
    coeffs = [rng.randint(lo, hi) for _ in datum.lattice_basis]
    return tuple(sum(c * b[k] for c, b in zip(coeffs, datum.lattice_basis))
                 for k in range(datum.ambient_dim))


def random_dominant(datum: RootDatum, rng: random.Random, bound: int = 3, in_coroot: bool = False) -> tuple:
    while True:
        lam = random_lattice_point(datum, rng, 0, bound)
        lam = dominant_representative(datum, lam)[0]
        if not in_coroot or datum.in_coroot_lattice(lam):
            return tuple(int(a) for a in lam)


def waff_ball(datum: RootDatum, radius: int) -> list:
    """All of W_aff up to the given length, sorted."""
    out = {affine.identity(datum)}
    frontier = list(out)
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for i in range(datum.rank + 1):
                y = x.left_mul(i)
                if y.length > x.length and y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(out, key=ExtAffineElement.sort_key)


def dominant_grid(datum: RootDatum, bound: int) -> list:
    """Dominant mu in X_* with every ambient coordinate in [-bound, bound]."""
    out = []
    for mu in itertools.product(range(-bound, bound + 1), repeat=datum.ambient_dim):
        if datum.is_dominant(mu) and datum.in_lattice(mu):
            out.append(mu)
    return out


def largest_mu(datum: RootDatum, bound: int = 2) -> tuple:
    return max(dominant_grid(datum, bound), key=lambda m: (sum(abs(a) for a in m), m))


def nonneg_grid(datum: RootDatum, bound: int) -> list:
    """Dominant mu in X_* with every coordinate in [0, bound]."""
    return [mu for mu in dominant_grid(datum, bound) if min(mu) >= 0]


# -- checks ------------------------------------------------------------------------

REGISTRY: dict[str, tuple[str, Callable[[Params], Verdict]]] = {}


def statement(name: str, summary: str):
    def deco(fn):
        REGISTRY[name] = (summary, fn)
        return fn
    return deco


def _verdict(name, datum, p, failures, checked, details=None) -> Verdict:
    return Verdict(name, datum.name if datum is not None else "", _params_dict(p), not failures,
                   checked, failures[0] if failures else None, details or {})


def adm_by_descent(datum: RootDatum, mu) -> set:
    """Downward closure of the t_lam under reflections in walls separating A_0 from x(A_0)."""
    seen = set(musets.extreme_translations(datum, mu))
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for j, k in enumerate(x.alcove_coords):
                lo, hi = (1, k) if k > 0 else (k + 1, 0)
                for m in range(lo, hi + 1):
                    y = compose(affine.affine_reflection(datum, j, m), x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        frontier = nxt
    return seen


@statement("adm-in-perm", "every mu-admissible element is mu-permissible")
def check_adm_in_perm(p: Params) -> Verdict:
    d = p.datum("B", 2)
    mu = p.mu or (1,) + (0,) * (d.ambient_dim - 1)
    adm = adm_by_descent(d, mu)
    perm = set(musets.enumerate_perm(d, mu))
    bad = sorted(adm - perm, key=ExtAffineElement.sort_key)
    return _verdict("adm-in-perm", d, p, bad, len(adm), {"adm": len(adm), "perm": len(perm)})


@statement("gl-equality", "Adm = Perm = Perm^st on GL(n)")
def check_gl_equality(p: Params) -> Verdict:
    d = p.datum("GL", 3)
    mu = p.mu or (1,) + (0,) * (d.ambient_dim - 1)
    r = musets.compare(d, mu)
    bad = r.perm_minus_adm + r.perm_minus_perm_st
    return _verdict("gl-equality", d, p, bad, len(r.perm), r.counts)


@statement("strong-in-adm", "Perm^st is contained in Adm")
def check_strong_in_adm(p: Params) -> Verdict:
    d = p.datum("B", 2)
    mu = p.mu or (1,) + (0,) * (d.ambient_dim - 1)
    r = musets.compare(d, mu)
    adm = set(r.adm)
    bad = [x for x in r.perm_st if x not in adm]
    return _verdict("strong-in-adm", d, p, bad, len(r.perm_st), r.counts)


def orbit_cone_points(datum: RootDatum, v, w, window) -> set:
    """W_aff(v) cap (v + w(B_0)) inside a box window (same coordinates as strong_set)."""
    winv = w.inverse()
    base = winv(vector(v))
    out = set()
    orbit = weyl_orbit(datum, vector(v))
    # q = lam + u with lam in the coroot lattice, u in W_0 v.  If q - v = w(c) with c in
    # the box, then coords(lam) = coords(w(c)) + coords(v - u), which bounds the search.
    h = max(abs(a) for j in range(datum.n_pos) for a in datum.simple_coroot_coords(datum.coroots[j]))
    bound = h * sum(-lo for lo in window.lower)
    for u in orbit:
        centre = datum.simple_coroot_coords(datum.project_to_root_span(sub(vector(v), u)))
        ranges = [range(math.floor(x - bound), math.ceil(x + bound) + 1) for x in centre]
        for coeffs in itertools.product(*ranges):
            lam = [0] * datum.ambient_dim
            for c, cv in zip(coeffs, datum.simple_coroots):
                for k in range(datum.ambient_dim):
                    lam[k] += c * cv[k]
            q = add(u, vector(lam))
            c = datum.simple_coroot_coords(sub(winv(q), base))
            if all(lo <= x <= 0 for lo, x in zip(window.lower, c)) and datum.in_root_span(sub(q, v)):
                out.add(q)
    return out


@statement("type-a-strong", "on type A, B(v,w) is W_aff(v) cap (v + w(B_0)) and Perm = Perm^st")
def check_type_a_strong(p: Params) -> Verdict:
    d = p.datum("GL", 3)
    failures, checked = [], 0
    window = alcoves.Window((-p.radius,) * d.rank)
    for a in d.base_alcove_vertices:
        for w in enumerate_finite_weyl(d):
            s = alcoves.strong_set(d, a, w, window)
            o = orbit_cone_points(d, a, w, window)
            checked += 1
            if s != o:
                failures.append({"vertex": list(a), "w": list(w.word)})
    mu = p.mu or (2,) + (0,) * (d.ambient_dim - 1)
    r = musets.compare(d, mu)
    if r.perm_minus_perm_st:
        failures.append(r.perm_minus_perm_st[0])
    return _verdict("type-a-strong", d, p, failures, checked, r.counts)


@statement("special-vertex-strong", "at special vertices B(v,w) is v minus the N-span of w(simple coroots)")
def check_special_vertex(p: Params) -> Verdict:
    d = p.datum("B", 2)
    failures, checked = [], 0
    window = alcoves.Window((-p.radius,) * d.rank)
    for a in d.base_alcove_vertices:
        if not d.in_coweight_lattice(d.project_to_root_span(a)):
            continue
        for w in enumerate_finite_weyl(d):
            s = alcoves.strong_set(d, a, w, window)
            cone = set()
            for coeffs in itertools.product(*[range(0, -lo + 1) for lo in window.lower]):
                q = vector(a)
                for c, cv in zip(coeffs, d.simple_coroots):
                    q = sub(q, tuple(c * x for x in w(cv)))
                cone.add(q)
            checked += 1
            if s != cone:
                failures.append({"vertex": list(a), "w": list(w.word)})
    return _verdict("special-vertex-strong", d, p, failures, checked)


@statement("strong-vs-orbit", "search for vertices where B(v,w) is smaller than W_aff(v) cap (v + w(B_0))")
def check_strong_vs_orbit(p: Params) -> Verdict:
    """Informational: always passes; the witnesses found are reported in details."""
    d = p.datum("B", 2)
    window = alcoves.Window((-p.radius,) * d.rank)
    found, cone_gaps, checked = [], [], 0
    for a in d.base_alcove_vertices:
        for w in enumerate_finite_weyl(d):
            s = alcoves.strong_set(d, a, w, window)
            o = orbit_cone_points(d, a, w, window)
            checked += 1
            if not s <= o:
                raise AssertionError("B(v,w) must lie in W_aff(v) cap (v + w(B_0))")
            if s != o:
                missing = sorted(o - s)
                found.append({"vertex": list(a), "w": list(w.word), "missing": missing[:3]})
    return Verdict("strong-vs-orbit", d.name, _params_dict(p), True, checked, None,
                   {"strict_inclusions": found, "count": len(found), "cone_gaps": cone_gaps})


@statement("direction-minimal", "galleries in a w-direction are minimal, and directions do not depend on the minimal gallery")
def check_direction_minimal(p: Params) -> Verdict:
    d = p.datum("B", 2)
    rng = random.Random(p.seed)
    ws = enumerate_finite_weyl(d)
    failures, checked = [], 0
    for _ in range(p.samples):
        x = random_element(d, rng, 6)
        word = [rng.randint(0, d.rank) for _ in range(rng.randint(0, 6))]
        g = alcoves.gallery_from_word(x, word)
        for w in ws:
            if in_w_direction(g, w) and not is_minimal(g):
                failures.append({"start": x, "word": word, "w": list(w.word)})
        A = alcove_of(x)
        B = alcove_of(compose(x, affine.from_word(d, word)))
        gs = alcoves.all_minimal_galleries(A, B)
        for w in ws:
            flags = {in_w_direction(h, w) for h in gs}
            if len(flags) > 1:
                failures.append({"A": A, "B": B, "w": list(w.word)})
        checked += 1
    return _verdict("direction-minimal", d, p, failures, checked)


@statement("pointed-in-acute", "pointed cones lie inside acute cones")
def check_pointed_in_acute(p: Params) -> Verdict:
    d = p.datum("B", 2)
    rng = random.Random(p.seed)
    ws = enumerate_finite_weyl(d)
    failures, checked, hits = [], 0, 0
    for _ in range(p.samples):
        a = random_interior_point(d, rng)
        A = random_alcove(d, rng, 5)
        B = random_alcove(d, rng, 8)
        # one w whose closed chamber holds B(a) - A(a), so the hypothesis holds,
        # and one uniformly random w
        _, u = dominant_representative(d, sub(B.point(a), A.point(a)))
        for w in (u.inverse(), rng.choice(ws)):
            if alcoves.pointed_cone_member(a, A, w, B):
                hits += 1
                if not in_acute_cone(A, w, B):
                    failures.append({"a": list(a), "A": A, "B": B, "w": list(w.word)})
        checked += 1
    return _verdict("pointed-in-acute", d, p, failures, checked, {"pointed_hits": hits})


@statement("cone-cover", "every alcove lies in some acute cone C(A,w), reached by a w-direction gallery")
def check_cone_cover(p: Params) -> Verdict:
    d = p.datum("B", 2)
    rng = random.Random(p.seed)
    failures, checked = [], 0
    for _ in range(p.samples):
        A = random_alcove(d, rng, 5)
        B = random_alcove(d, rng, 5)
        w = alcoves.find_direction(A, B)
        g = alcoves.minimal_gallery(A, B)
        if not (in_acute_cone(A, w, B) and in_w_direction(g, w)):
            failures.append({"A": A, "B": B, "w": list(w.word)})
        checked += 1
    return _verdict("cone-cover", d, p, failures, checked)


@statement("translation-in-cone", "t_{w mu}(A_0) lies in C(A_0, w), and in the pointed cone for mu in the coroot lattice")
def check_translation_in_cone(p: Params) -> Verdict:
    d = p.datum("B", 2)
    rng = random.Random(p.seed)
    A0 = base_alcove(d)
    ws = enumerate_finite_weyl(d)
    failures, checked = [], 0
    for _ in range(p.samples):
        mu = random_dominant(d, rng, 3)
        w = rng.choice(ws)
        B = alcove_of(translation(d, w(mu)))
        if not in_acute_cone(A0, w, B):
            failures.append({"mu": list(mu), "w": list(w.word)})
        if d.in_coroot_lattice(mu):
            a = random_interior_point(d, rng)
            if not alcoves.pointed_cone_member(a, A0, w, B):
                failures.append({"mu": list(mu), "w": list(w.word), "a": list(a)})
        checked += 1
    return _verdict("translation-in-cone", d, p, failures, checked)


def _alcove_ball(A: Alcove, radius: int) -> set:
    out = {A}
    frontier = [A]
    for _ in range(radius):
        nxt = []
        for B in frontier:
            for C in B.neighbors():
                if C not in out:
                    out.add(C)
                    nxt.append(C)
        frontier = nxt
    return out


@statement("acute-halfspace", "C(A,w) by w-direction galleries equals the intersection of w-positive half-spaces")
def check_acute_halfspace(p: Params) -> Verdict:
    d = p.datum("B", 2)
    rng = random.Random(p.seed)
    ws = enumerate_finite_weyl(d)
    failures, checked = [], 0
    radius = p.radius
    for _ in range(-(-p.samples // len(ws))):
        A = random_alcove(d, rng, 5)
        ball = _alcove_ball(A, radius)
        for w in ws:
            reach = {A}
            frontier = [A]
            while frontier:
                nxt = []
                for B in frontier:
                    for C in B.neighbors():
                        if C in reach or alcoves.distance(A, C) > radius:
                            continue
                        h = alcoves.common_wall(B, C)
                        up = C.coords[h.root] > B.coords[h.root]
                        if up == alcoves._in_w_positive(w, h.root):
                            reach.add(C)
                            nxt.append(C)
                frontier = nxt
            cone = {B for B in ball if in_acute_cone(A, w, B)}
            checked += 1
            if reach != cone:
                failures.append({"A": A, "w": list(w.word)})
    return _verdict("acute-halfspace", d, p, failures, checked)


@statement("length-additivity", "l(xy) = l(x) + l(y) exactly when the concatenated word is reduced")
def check_length_additivity(p: Params) -> Verdict:
    d = p.datum("B", 2)
    rng = random.Random(p.seed)
    failures, checked = [], 0
    for _ in range(p.samples):
        x = random_element(d, rng, 6)
        y = random_element(d, rng, 6)
        word = affine.reduced_word(x) + affine.reduced_word(y)
        reduced = is_minimal(alcoves.gallery_from_word(affine.identity(d), word))
        additive = compose(x, y).length == x.length + y.length
        if reduced != additive:
            failures.append({"x": x, "y": y})
        checked += 1
    return _verdict("length-additivity", d, p, failures, checked)


@statement("lifting", "for a left descent s of y: x <= y iff min(x, sx) <= sy")
def check_lifting(p: Params) -> Verdict:
    d = p.datum("B", 2)
    ball = waff_ball(d, p.radius)
    failures, checked = [], 0
    for y in ball:
        for s in y.left_descents():
            sy = y.left_mul(s)
            for x in ball:
                sx = x.left_mul(s)
                lo = sx if sx.length < x.length else x
                checked += 1
                if bruhat_leq(x, y) != bruhat_leq(lo, sy):
                    failures.append({"x": x, "y": y, "s": s})
    return _verdict("lifting", d, p, failures, checked)


@statement("parabolic-bruhat", "x <= y iff x^J <= y^J for every vertex stabilizer J")
def check_parabolic_bruhat(p: Params) -> Verdict:
    d = p.datum("B", 2)
    ball = waff_ball(d, p.radius)
    Js = alcoves.vertex_stabilizers(d)
    mins = {x: [alcoves.parabolic_decompose(x, J)[0] for J in Js] for x in ball}
    failures, checked = [], 0
    for x in ball:
        for y in ball:
            lhs = bruhat_leq(x, y)
            rhs = all(bruhat_leq(a, b) for a, b in zip(mins[x], mins[y]))
            checked += 1
            if lhs != rhs:
                failures.append({"x": x, "y": y})
    return _verdict("parabolic-bruhat", d, p, failures, checked)


@statement("chamber-conv", "inside the chamber w(C_0), Conv(mu) agrees with w mu + w(B_0)")
def check_chamber_conv(p: Params) -> Verdict:
    d = p.datum("B", 2)
    mu = p.mu or largest_mu(d)
    poly = WeylPolytope(d, mu)
    failures, checked = [], 0
    r = p.radius
    for v in itertools.product(range(-r, r + 1), repeat=d.ambient_dim):
        for w in enumerate_finite_weyl(d):
            if not d.is_dominant(w.inverse()(v)):
                continue
            in_cone = alcoves.obtuse_member(d, v, w(mu), w)
            checked += 1
            if in_cone != poly.contains(v):
                failures.append({"v": list(v), "w": list(w.word)})
    return _verdict("chamber-conv", d, p, failures, checked)


@statement("coset-bruhat", "near t_lam the order on t_lam w_lam W_0 is the order on W_0")
def check_coset_bruhat(p: Params) -> Verdict:
    d = p.datum("B", 2)
    rng = random.Random(p.seed)
    ws = enumerate_finite_weyl(d)
    fin = {w: finite_element(w) for w in ws}
    failures, checked = [], 0
    for _ in range(max(1, p.samples // 10)):
        lam = random_lattice_point(d, rng, -3, 3)
        base = affine.minimal_in_finite_coset(translation(d, lam))
        for w1 in ws:
            for w2 in ws:
                lhs = bruhat_leq(compose(base, fin[w1]), compose(base, fin[w2]))
                rhs = fin[w1] in affine.lower_interval(fin[w2])
                checked += 1
                if lhs != rhs:
                    failures.append({"lam": list(lam), "w1": list(w1.word), "w2": list(w2.word)})
    # the longest element of t_{w^{-1} mu} W_0 is t_{w^{-1} mu} w^{-1} for regular dominant mu
    for _ in range(max(1, p.samples // 20)):
        mu = random_dominant(d, rng, 3)
        if not d.is_regular(mu):
            continue
        for w in ws:
            t = translation(d, w.inverse()(mu))
            top = max((compose(t, fin[u]) for u in ws), key=lambda z: z.length)
            checked += 1
            if top != compose(t, fin[w.inverse()]):
                failures.append({"mu": list(mu), "w": list(w.word)})
    return _verdict("coset-bruhat", d, p, failures, checked)


def _ehresmann_leq(u: tuple, v: tuple) -> bool:
    """Tableau criterion for the Bruhat order on permutations in one-line notation."""
    n = len(u)
    return all(sorted(u[:k]) <= sorted(v[:k]) and
               all(a <= b for a, b in zip(sorted(u[:k]), sorted(v[:k])))
               for k in range(1, n))


def one_line(w) -> tuple:
    """One-line notation of a GL(n) Weyl group element: w(e_i) = e_{pi(i)}."""
    n = w.datum.ambient_dim
    return tuple(w(tuple(1 if k == i else 0 for k in range(n))).index(1) + 1 for i in range(n))


@statement("coweight-order", "in type A, w' <= w iff w'(lam) - w(lam) is a sum of positive coroots for dominant lam")
def check_coweight_order(p: Params) -> Verdict:
    d = p.datum("GL", 4)
    ws = enumerate_finite_weyl(d)
    failures, checked = [], 0
    lines = {w: one_line(w) for w in ws}
    for w2 in ws:
        for w in ws:
            crit = musets.coweight_order_criterion(d, w2, w)
            leq = bruhat_leq(finite_element(w2), finite_element(w))
            oracle = _ehresmann_leq(tuple(sorted(range(1, len(lines[w]) + 1), key=lambda i: lines[w2][i - 1])),
                                    tuple(sorted(range(1, len(lines[w]) + 1), key=lambda i: lines[w][i - 1])))
            checked += 1
            if not (crit == leq == oracle):
                failures.append({"w2": list(w2.word), "w": list(w.word), "criterion": crit,
                                 "bruhat": leq, "tableau": oracle})
    return _verdict("coweight-order", d, p, failures, checked)


@statement("extreme-cone", "t_{w_0 mu} w(A_0) lies in C(A_0, w_0)")
def check_extreme_cone(p: Params) -> Verdict:
    d = p.datum("B", 2)
    w0 = longest_element(d)
    A0 = base_alcove(d)
    failures, checked = [], 0
    mus = [p.mu] if p.mu else nonneg_grid(d, 2)
    for mu in mus:
        t = translation(d, w0(mu))
        for w in enumerate_finite_weyl(d):
            checked += 1
            if not in_acute_cone(A0, w0, alcove_of(compose(t, finite_element(w)))):
                failures.append({"mu": list(mu), "w": list(w.word)})
    return _verdict("extreme-cone", d, p, failures, checked)


@statement("coweight-pair", "an equal-length pair ordered on coweights exists exactly in rank >= 4 outside type A")
def check_coweight_pair(p: Params) -> Verdict:
    d = p.datum("D", 4)
    pair = musets.search_coweight_pair(d)
    expected = d.rank >= 4 and d.family not in ("A", "GL")
    passed = (pair is not None) == expected
    details = {"pair": None if pair is None else [list(pair[0].word), list(pair[1].word)]}
    return Verdict("coweight-pair", d.name, _params_dict(p), passed, 1, None if passed else details, details)


@statement("counterexample", "t_{w^{-1} mu} w^{-1} w' is permissible, not admissible, and of length l(t_mu)")
def check_counterexample(p: Params) -> Verdict:
    d = p.datum("B", 4)
    wit = musets.counterexample_pipeline(d)
    if wit is None:
        return Verdict("counterexample", d.name, _params_dict(p), False, 0, "no pair found", {})
    return Verdict("counterexample", d.name, _params_dict(p), wit.ok, 1,
                   None if wit.ok else wit.to_json(), wit.to_json())


# -- fixed points of the flip ---------------------------------------------------------

def _theta(p: Params, size: int = 4) -> steinberg.ThetaAutomorphism:
    return steinberg.build_theta(p.datum("GL", size))


@statement("fixed-datum", "the fixed root system is of type C and its affine Weyl group is the Theta-commuting part")
def check_fixed_datum(p: Params) -> Verdict:
    th = _theta(p)
    f, h = th.fixed_datum, th.host
    failures = []
    n = f.rank
    cartan = f.cartan_pairings
    # type C_n: chain with one double bond, long root last
    for i in range(n):
        for j in range(n):
            if i == j:
                ok = cartan[i][j] == 2
            elif abs(i - j) > 1:
                ok = cartan[i][j] == 0
            elif (i, j) == (n - 2, n - 1):
                ok = cartan[i][j] == -1
            elif (i, j) == (n - 1, n - 2):
                ok = cartan[i][j] == -2
            else:
                ok = cartan[i][j] == -1
            if not ok:
                failures.append({"cartan": [list(r) for r in cartan]})
    ball = waff_ball(f, p.radius)
    images = {th.embed_element(x) for x in ball}
    checked = len(ball)
    for y in images:
        if not (th.in_fixed_group(y) and y.in_waff()):
            failures.append(y)
    host_ball = waff_ball(h, 2 * p.radius + 2)
    fixed_part = {y for y in host_ball if th.in_fixed_group(y)}
    pulled = {th.restrict_element(y) for y in fixed_part}
    for x in pulled:
        if not x.in_waff():
            failures.append(x)
    for x in pulled:
        if x.length <= p.radius and x not in set(ball):
            failures.append(x)
    return _verdict("fixed-datum", f, p, failures, checked, {"ball": len(ball)})


@statement("half-roots", "orbit averages of host roots are fixed roots or half fixed roots, preserving positivity")
def check_half_roots(p: Params) -> Verdict:
    th = _theta(p)
    f, h = th.fixed_datum, th.host
    failures = []
    for j, b in enumerate(h.roots):
        avg, kind = th.bar_theta(b)
        target = avg if kind == "root" else tuple(2 * a for a in avg)
        if (j < h.n_pos) != (f.root_index[target] < f.n_pos):
            failures.append({"root": list(b)})
    for j, pre in th.root_preimages.items():
        if not pre:
            failures.append({"fixed_root": list(f.roots[j])})
    return _verdict("half-roots", f, p, failures, len(h.roots))


def _restriction_is_empty(th, A: Alcove) -> bool:
    """Vertex oracle: Theta permutes alcoves and fixes exactly V^[Theta] pointwise, so A
    meets V^[Theta] iff Theta(A) = A (then the barycenter of A is fixed).  The comparison
    is made in the root span, where the flip acts without the central twist."""
    h = th.host
    x = A.element
    verts = {h.project_to_root_span(x(a)) for a in h.base_alcove_vertices}
    return {h.project_to_root_span(th.action(v)) for v in verts} != verts


@statement("alcove-restriction", "a host alcove meets V^[Theta] in a fixed alcove or not at all")
def check_alcove_restriction(p: Params) -> Verdict:
    th = _theta(p)
    f, h = th.fixed_datum, th.host
    failures, checked = [], 0
    if th.restrict_alcove(base_alcove(h)) != base_alcove(f):
        failures.append("base alcove")
    for x in waff_ball(f, p.radius):
        B = alcove_of(x)
        checked += 1
        if th.restrict_alcove(th.host_alcove(B)) != B:
            failures.append(x)
    rng = random.Random(p.seed)
    empties = 0
    for _ in range(max(1, p.samples // 10)):
        A = random_alcove(h, rng, 3)
        res = th.restrict_alcove(A)
        checked += 1
        if (res is None) != _restriction_is_empty(th, A):
            failures.append(A)
        empties += res is None
    return _verdict("alcove-restriction", f, p, failures, checked, {"empty_restrictions": empties})


def _w_positive_side(datum: RootDatum, w, j: int, k: int, v) -> bool:
    """Is v strictly on the w-positive side of H_{root_j, k}?"""
    if w.inverse_perm[j] < datum.n_pos:
        return datum.pair_root(j, v) > k
    return datum.pair_root(j, v) < k


@statement("halfspace-restriction", "w-positive host half-spaces restrict to w-positive fixed half-spaces")
def check_halfspace_restriction(p: Params) -> Verdict:
    th = _theta(p)
    f, h = th.fixed_datum, th.host
    rng = random.Random(p.seed)
    failures, checked = [], 0
    ws = th.fixed_finite_in_host
    points = []
    for _ in range(p.samples):
        cs = [Fraction(rng.randint(-4 * p.radius, 4 * p.radius), rng.randint(1, 4))
              for _ in th.fixed_space_basis]
        points.append(vector(sum(c * b[k] for c, b in zip(cs, th.fixed_space_basis))
                             for k in range(h.ambient_dim)))
    for w in ws:
        wf = th.restrict_element(finite_element(w)).finite
        for j in range(h.n_pos):
            for k in range(-p.radius, p.radius + 1):
                jf, kf = th.restricted_half_space(j, k)
                for v in points:
                    checked += 1
                    if _w_positive_side(h, w, j, k, v) != _w_positive_side(f, wf, jf, kf, v):
                        failures.append({"w": list(w.word), "root": list(h.roots[j]), "k": k, "v": list(v)})
    return _verdict("halfspace-restriction", f, p, failures, checked)


@statement("cone-restriction", "acute cones of the fixed datum are the restrictions of host acute cones")
def check_cone_restriction(p: Params) -> Verdict:
    th = _theta(p)
    f, h = th.fixed_datum, th.host
    failures, checked = [], 0
    A0f, A0h = base_alcove(f), base_alcove(h)
    alcs = [alcove_of(x) for x in waff_ball(f, p.radius)]
    hosts = {B: th.host_alcove(B) for B in alcs}
    for wf in enumerate_finite_weyl(f):
        wh = th.embed_finite(wf)
        for B in alcs:
            checked += 1
            if in_acute_cone(A0f, wf, B) != in_acute_cone(A0h, wh, hosts[B]):
                failures.append({"w": list(wf.word), "B": B})
    return _verdict("cone-restriction", f, p, failures, checked)


@statement("bruhat-inheritance", "the Bruhat order of the fixed group is induced from the host")
def check_bruhat_inheritance(p: Params) -> Verdict:
    th = _theta(p)
    f = th.fixed_datum
    ball = waff_ball(f, p.radius)
    # include a non-trivial Omega-coset as well
    tau = translation(f, f.lattice_basis[-1]).omega
    ball = ball + [compose(x, tau) for x in ball]
    failures, checked = [], 0
    for x in ball:
        for y in ball:
            a, b = steinberg.check_bruhat_inheritance(th, x, y)
            checked += 1
            if a != b:
                failures.append({"x": x, "y": y, "fixed": a, "host": b})
    return _verdict("bruhat-inheritance", f, p, failures, checked)


@statement("fixed-perm", "host Perm(mu) cut down to the fixed subgroup is the fixed Adm(mu)")
def check_fixed_perm(p: Params) -> Verdict:
    th = _theta(p)
    f = th.fixed_datum
    mu = p.mu or (1,) * (f.ambient_dim // 2) + (0,) * (f.ambient_dim // 2)
    lhs = steinberg.adm_theta_via_perm(th, mu)
    rhs = musets.enumerate_adm(f, mu)
    diff = sorted(set(lhs) ^ set(rhs), key=ExtAffineElement.sort_key)
    return _verdict("fixed-perm", f, p, diff, len(rhs), {"host_side": len(lhs), "adm": len(rhs)})


@statement("symplectic-equality", "Adm = Perm on GSp(2n) for mu = (a^n, b^n)")
def check_symplectic_equality(p: Params) -> Verdict:
    f = p.datum("GSp", 4)
    n = f.ambient_dim // 2
    mu = p.mu or (1,) * n + (0,) * n
    r = musets.compare(f, mu)
    return _verdict("symplectic-equality", f, p, r.perm_minus_adm, len(r.perm), r.counts)


@statement("odd-orthogonal-counts", "B_2, mu=(1,0): |Adm^B| = 13 and |Perm^A4 cap W~(B_2)| = |Adm^C| = 19")
def check_odd_orthogonal_counts(p: Params) -> Verdict:
    n = p.size or 2
    mu = p.mu or (1,) + (0,) * (n - 1)
    r = steinberg.odd_orthogonal_counts(n, mu)
    c = r.counts
    passed = c["perm_host_cap_B"] == c["adm_C"] and (n, tuple(mu)) != (2, (1, 0)) or \
        (c["adm_B"], c["adm_C"], c["perm_host_cap_B"]) == (13, 19, 19)
    return Verdict("odd-orthogonal-counts", f"B{n}", _params_dict(p), passed, 1,
                   None if passed else c, c)


@statement("odd-orthogonal-order", "s_0, s_1 of B_2 are incomparable but their images in C_2 are related")
def check_odd_orthogonal_order(p: Params) -> Verdict:
    n = p.size or 2
    r = steinberg.non_inheritance_witness(n)
    expected = {"s0_leq_s1": False, "s1_leq_s0": False, "image_of_s0_is_s0s1s0": True,
                "image_of_s1_is_s1": True, "image_of_tau_is_s0": True, "images_related": True}
    passed = r == expected
    coset = steinberg.search_coset_non_inheritance(n, p.radius)
    details = dict(r)
    details["coset_witness"] = None if coset is None else list(coset)
    return Verdict("odd-orthogonal-order", f"B{n}", _params_dict(p), passed, 1,
                   None if passed else r, details)


@statement("odd-orthogonal-report", "Adm and Perm of B_n for multiples of the minuscule coweight (reported, not asserted equal)")
def check_odd_orthogonal_report(p: Params) -> Verdict:
    """Passes when Adm is inside Perm; the counts and any difference are left in details."""
    d = p.datum("B", 2)
    mus = [p.mu] if p.mu else [(k,) + (0,) * (d.ambient_dim - 1) for k in range(1, 4)]
    rows, bad = [], []
    for mu in mus:
        r = musets.compare(d, mu)
        rows.append({"mu": list(mu), **r.counts, "perm_minus_adm": r.perm_minus_adm})
        if not r.verdicts["adm_subset_perm"]:
            bad.append({"mu": list(mu)})
    return _verdict("odd-orthogonal-report", d, p, bad, len(mus), {"rows": rows})


@statement("conv-oracle", "the cone-intersection Conv test agrees with exact hull feasibility")
def check_conv_oracle(p: Params) -> Verdict:
    from .oracles import Hull

    d = p.datum("B", 2)
    mu = p.mu or largest_mu(d)
    hull = Hull(weyl_orbit(d, mu))
    poly = WeylPolytope(d, mu)
    r = max(abs(a) for a in mu) + 1
    failures, checked = [], 0
    for v in itertools.product(range(-r, r + 1), repeat=d.ambient_dim):
        a = conv_membership(d, mu, v)
        b = hull.contains(v)
        checked += 1
        if not (a == b == poly.contains(v)):
            failures.append({"v": list(v), "cone": a, "hull": b})
    return _verdict("conv-oracle", d, p, failures, checked)


@statement("adm-oracle", "Adm by filtering Perm agrees with the union of lower Bruhat intervals")
def check_adm_oracle(p: Params) -> Verdict:
    d = p.datum("GL", 3)
    mu = p.mu or (1,) + (0,) * (d.ambient_dim - 1)
    a = set(musets.enumerate_adm(d, mu))
    b = set(musets.enumerate_adm_by_intervals(d, mu))
    c = adm_by_descent(d, mu)
    diff = sorted((a ^ b) | (a ^ c), key=ExtAffineElement.sort_key)
    return _verdict("adm-oracle", d, p, diff, len(a), {"filter": len(a), "intervals": len(b)})


def run(name: str, params: Params) -> Verdict:
    if name not in REGISTRY:
        raise ConfigurationError(f"unknown statement {name!r}; known: {', '.join(sorted(REGISTRY))}")
    return REGISTRY[name][1](params)
