"""Folding by the flip automorphism of GL(m) and the root system of its fixed points.

The flip is Theta(x_1, ..., x_m) = (-x_m, ..., -x_1).  Its fixed-point root system
is built from orbit averages of host roots, and the fixed affine Weyl group sits
inside the host one as the elements commuting with Theta.  Also here: the
odd orthogonal group B_n viewed inside C_n, where the Bruhat order is not
inherited.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import affine, alcoves
from .affine import ExtAffineElement, bruhat_leq, compose, finite_element, translation
from .alcoves import Alcove, alcove_of, element_from_coords
from .errors import ConfigurationError, ConsistencyError
from .exact import add, dot, normalize, scale, vector
from .musets import enumerate_adm, enumerate_perm
from .rootsys import (FiniteWeylElement, RootDatum, build_root_datum, enumerate_finite_weyl)

HALF = Fraction(1, 2)


def flip(v) -> tuple:
    return tuple(-a for a in reversed(tuple(v)))


@dataclass(frozen=True, eq=False)
class ThetaAutomorphism:
    """The flip on a type-A host (GL(m), or A_{m-1} in sum-zero coordinates)."""

    host: RootDatum

    def __repr__(self):
        return f"Theta({self.host.name})"

    def action(self, v) -> tuple:
        return flip(v)

    @property
    def m(self) -> int:
        return self.host.ambient_dim

    @cached_property
    def root_perm(self) -> tuple:
        h = self.host
        return tuple(h.root_index[flip(b)] for b in h.roots)

    def average(self, v) -> tuple:
        return tuple(normalize((a + b) * HALF) for a, b in zip(v, flip(v)))

    @cached_property
    def simple_orbits(self) -> list:
        """Theta-orbits on the host simple roots, as sets of indices 1..rank."""
        h = self.host
        seen, out = set(), []
        for i in range(1, h.rank + 1):
            if i in seen:
                continue
            j = h.simple_roots.index(flip(h.simple_roots[i - 1])) + 1
            orbit = tuple(sorted({i, j}))
            seen.update(orbit)
            out.append(orbit)
        return out

    def _orbit_root(self, orbit) -> tuple:
        """alpha_pi: average of the highest root of R inside the span of the orbit."""
        h = self.host
        span = [h.simple_roots[i - 1] for i in orbit]
        inside = []
        for b in h.positive_roots:
            c = h.simple_root_coords(b)
            if all(c[k] == 0 for k in range(h.rank) if k + 1 not in orbit):
                inside.append(b)
        del span
        avgs = [self.average(b) for b in inside]
        return max(avgs, key=lambda v: (dot(v, v), v))

    @cached_property
    def fixed_lattice_basis(self) -> tuple:
        m = self.m
        n = m // 2
        basis = [tuple(1 if k == i else (-1 if k == m - 1 - i else 0) for k in range(m))
                 for i in range(n)]
        if self.host.family == "GL":
            if m % 2 == 0:
                basis.append(tuple([0] * n + [1] * n))
            else:
                basis.append(tuple([0] * n + [1] + [2] * n))
        return tuple(basis)

    @cached_property
    def fixed_datum(self) -> RootDatum:
        h = self.host
        simple = tuple(self._orbit_root(o) for o in self.simple_orbits)
        verts = h.base_alcove_vertices
        m = len(verts)
        fixed_verts = [verts[0]]
        for i in range(1, m // 2 + 1):
            a, b = verts[i], verts[m - i] if m - i < m else verts[0]
            fixed_verts.append(tuple(normalize((x + y) * HALF) for x, y in zip(a, b)))
        n = len(simple)
        if h.family == "GL" and self.m % 2 == 0:
            return RootDatum("GSp", self.m, simple, self.fixed_lattice_basis, tuple(fixed_verts),
                             f"GSp({self.m})")
        return RootDatum("C", n, simple, self.fixed_lattice_basis, tuple(fixed_verts),
                         f"C{n}[{h.name}]")

    @property
    def fixed_space_basis(self) -> tuple:
        return self.fixed_lattice_basis

    # -- roots ---------------------------------------------------------------
    def bar_theta(self, alpha) -> tuple:
        alpha = vector(alpha)
        if alpha not in self.host.root_index:
            raise ConfigurationError(f"{alpha} is not a host root")
        avg = self.average(alpha)
        fixed = self.fixed_datum.root_index
        if avg in fixed:
            return avg, "root"
        if scale(2, avg) in fixed:
            return avg, "half-root"
        raise ConsistencyError(f"average {avg} is neither a root nor a half-root")

    @cached_property
    def root_preimages(self) -> dict:
        """fixed positive root index -> list of (host positive root index, is_half)."""
        f, h = self.fixed_datum, self.host
        out = {j: [] for j in range(f.n_pos)}
        for b in range(h.n_pos):
            avg, kind = self.bar_theta(h.roots[b])
            target = avg if kind == "root" else scale(2, avg)
            out[f.root_index[target]].append((b, kind == "half-root"))
        return out

    # -- group elements ------------------------------------------------------------
    def commutes(self, w: FiniteWeylElement) -> bool:
        t = self.root_perm
        return all(w.perm[t[j]] == t[w.perm[j]] for j in range(len(t)))

    def in_fixed_lattice(self, lam) -> bool:
        s = [a + b for a, b in zip(lam, reversed(lam))]
        if self.host.family == "GL":
            return len(set(s)) == 1 and (self.m % 2 == 0 or s[0] % 2 == 0)
        return not any(s)

    def in_fixed_group(self, x: ExtAffineElement) -> bool:
        """x lies in the fixed extended affine Weyl group inside the host."""
        return self.in_fixed_lattice(x.translation) and self.commutes(x.finite)

    @cached_property
    def fixed_finite_in_host(self) -> list:
        return [w for w in enumerate_finite_weyl(self.host) if self.commutes(w)]

    @cached_property
    def _simple_images(self) -> dict:
        h = self.host
        out = {}
        for idx, orbit in enumerate(self.simple_orbits, start=1):
            w = h.identity
            grown = True
            while grown:
                grown = False
                for i in orbit:
                    v = h.s(i) * w
                    if v.length > w.length:
                        w, grown = v, True
            out[idx] = w
        return out

    def embed_finite(self, w: FiniteWeylElement) -> FiniteWeylElement:
        out = self.host.identity
        for i in w.word:
            out = out * self._simple_images[i]
        return out

    def embed_element(self, x: ExtAffineElement) -> ExtAffineElement:
        if x.datum != self.fixed_datum:
            raise ConfigurationError("element is not over the fixed datum")
        return ExtAffineElement(self.host, x.translation, self.embed_finite(x.finite))

    embed = embed_element

    def restrict_element(self, y: ExtAffineElement) -> ExtAffineElement:
        """Inverse of embed_element on the fixed subgroup."""
        if not self.in_fixed_group(y):
            raise ConfigurationError(f"{y!r} does not commute with Theta")
        f = self.fixed_datum
        perm = tuple(f.root_index[y.finite(r)] for r in f.roots)
        return ExtAffineElement(f, y.translation, FiniteWeylElement(f, perm))

    @property
    def source(self) -> RootDatum:
        return self.fixed_datum

    @property
    def target(self) -> RootDatum:
        return self.host

    # -- alcoves ---------------------------------------------------------------------
    def restrict_alcove(self, A: Alcove):
        """The fixed alcove A cap V^[Theta], or None when the intersection is empty."""
        f = self.fixed_datum
        coords = []
        for j in range(f.n_pos):
            allowed = None
            for b, half in self.root_preimages[j]:
                k = A.coords[b]
                opts = {2 * k, 2 * k + 1} if half else {k}
                allowed = opts if allowed is None else allowed & opts
            if not allowed:
                return None
            if len(allowed) != 1:
                raise ConsistencyError("fixed alcove coordinate is not determined")
            coords.append(allowed.pop())
        if element_from_coords(f, coords) is None:
            return None
        return Alcove(f, tuple(coords))

    def host_alcove(self, B: Alcove) -> Alcove:
        """The host alcove containing the fixed alcove B."""
        return alcove_of(self.embed_element(B.element))

    def restricted_half_space(self, j: int, k: int):
        """For host wall H_{root_j, k}: (fixed root index, k') with the same trace on V."""
        avg, kind = self.bar_theta(self.host.roots[j])
        f = self.fixed_datum
        if kind == "root":
            return f.root_index[avg], k
        return f.root_index[scale(2, avg)], 2 * k


def build_theta(host: RootDatum, kind: str = "gl-flip") -> ThetaAutomorphism:
    if kind != "gl-flip":
        raise ConfigurationError(f"unsupported automorphism kind {kind!r}")
    if host.family not in ("GL", "A"):
        raise ConfigurationError("the flip is implemented on GL(m) and A_k hosts only")
    if host.family == "A" and host.ambient_dim % 2 == 0:
        raise ConfigurationError("use an even-rank A_{2n} host for the odd case")
    theta = ThetaAutomorphism(host)
    f = theta.fixed_datum
    if host.family == "GL" and host.ambient_dim % 2 == 0:
        if f != build_root_datum("GSp", host.ambient_dim):
            raise ConsistencyError("fixed datum of GL(2n) should be GSp(2n)")
    return theta


def bar_theta(theta: ThetaAutomorphism, alpha) -> tuple:
    return theta.bar_theta(alpha)


def embed_element(theta, x: ExtAffineElement) -> ExtAffineElement:
    return theta.embed(x)


def restrict_alcove(theta: ThetaAutomorphism, A: Alcove):
    return theta.restrict_alcove(A)


def check_bruhat_inheritance(embedding, x: ExtAffineElement, y: ExtAffineElement) -> tuple:
    """(x <= y in the source group, embed(x) <= embed(y) in the target group)."""
    return bruhat_leq(x, y), bruhat_leq(embedding.embed(x), embedding.embed(y))


def fixed_perm_in_host(theta: ThetaAutomorphism, mu) -> list:
    """Host Perm(mu) intersected with the fixed subgroup, pulled back to the fixed datum."""
    host = theta.host
    hits = enumerate_perm(host, mu, finite_subset=theta.fixed_finite_in_host,
                          point_filter=theta.in_fixed_lattice)
    return sorted((theta.restrict_element(x) for x in hits), key=ExtAffineElement.sort_key)


def adm_theta_via_perm(theta: ThetaAutomorphism, mu) -> list:
    """Perm(mu) on the type-A host cut down to the fixed subgroup."""
    if theta.host.family not in ("GL", "A"):
        raise ConfigurationError("the host must be of type A")
    return fixed_perm_in_host(theta, mu)


# -- B_n inside C_n ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TransportEmbedding:
    """Two data whose extended affine Weyl groups act by the same affine maps.

    Used for W~(B_n) = W_aff(C_n) in R^n: the finite parts correspond through the
    simple reflections (same hyperplanes), translations are kept as vectors.
    """

    source: RootDatum
    target: RootDatum

    def embed_finite(self, w: FiniteWeylElement) -> FiniteWeylElement:
        return self.target.weyl_from_word(w.word)

    def embed(self, x: ExtAffineElement) -> ExtAffineElement:
        return ExtAffineElement(self.target, x.translation, self.embed_finite(x.finite))

    def pull_back(self, y: ExtAffineElement) -> ExtAffineElement:
        return ExtAffineElement(self.source, y.translation, self.source.weyl_from_word(y.finite.word))


def b_in_c(n: int) -> TransportEmbedding:
    return TransportEmbedding(build_root_datum("B", n), build_root_datum("C", n))


@dataclass(frozen=True, eq=False)
class IotaEmbedding:
    """C_n in R^n into the fixed datum of the flip on A_{2n}: x -> (x, 0, -reverse x)."""

    source: RootDatum
    theta: ThetaAutomorphism

    @property
    def target(self) -> RootDatum:
        return self.theta.fixed_datum

    def iota(self, v) -> tuple:
        v = tuple(v)
        return v + (0,) + flip(v)

    def iota_inverse(self, v) -> tuple:
        return tuple(v[: self.source.ambient_dim])

    def embed(self, x: ExtAffineElement) -> ExtAffineElement:
        return ExtAffineElement(self.target, self.iota(x.translation),
                                self.target.weyl_from_word(x.finite.word))

    def pull_back(self, y: ExtAffineElement) -> ExtAffineElement:
        return ExtAffineElement(self.source, self.iota_inverse(y.translation),
                                self.source.weyl_from_word(y.finite.word))


def c_in_fixed(n: int) -> IotaEmbedding:
    return IotaEmbedding(build_root_datum("C", n), build_theta(build_root_datum("A", 2 * n)))


@dataclass
class OddOrthogonalCounts:
    n: int
    mu: tuple
    adm_b: list
    adm_c: list
    perm_host_cap_b: list

    @property
    def counts(self) -> dict:
        return {"adm_B": len(self.adm_b), "adm_C": len(self.adm_c),
                "perm_host_cap_B": len(self.perm_host_cap_b)}


def odd_orthogonal_counts(n: int, mu) -> OddOrthogonalCounts:
    """Adm^{B_n}(mu), Adm^{C_n}(mu) and Perm^{A_2n}(iota mu) cut down to W~(B_n)."""
    bc = b_in_c(n)
    ci = c_in_fixed(n)
    mu = tuple(mu)
    adm_b = enumerate_adm(bc.source, mu)
    adm_c = enumerate_adm(bc.target, mu)
    host_hits = fixed_perm_in_host(ci.theta, ci.iota(mu))
    pulled = []
    for y in host_hits:
        if any(y.translation[n:n + 1]):
            continue
        c_elt = ci.pull_back(y)
        if ci.embed(c_elt) != y:
            continue
        pulled.append(bc.pull_back(c_elt))
    pulled.sort(key=ExtAffineElement.sort_key)
    return OddOrthogonalCounts(n, mu, adm_b, adm_c, pulled)


def non_inheritance_witness(n: int = 2) -> dict:
    """s_0, s_1 of B_n are incomparable while s'_1 <= s'_0 s'_1 s'_0 in C_n."""
    bc = b_in_c(n)
    b, c = bc.source, bc.target
    s0, s1 = affine.simple_reflection(b, 0), affine.simple_reflection(b, 1)
    image0 = bc.embed(s0)
    expected = affine.from_word(c, [0, 1, 0])
    return {
        "s0_leq_s1": bruhat_leq(s0, s1),
        "s1_leq_s0": bruhat_leq(s1, s0),
        "image_of_s0_is_s0s1s0": image0 == expected,
        "image_of_s1_is_s1": bc.embed(s1) == affine.simple_reflection(c, 1),
        "images_related": bruhat_leq(bc.embed(s1), image0),
        "image_of_tau_is_s0": bc.embed(_length_zero(b)) == affine.simple_reflection(c, 0),
    }


def _length_zero(datum: RootDatum) -> ExtAffineElement:
    return next(x for x in _ball(datum, 0) if not x.is_identity())


def search_coset_non_inheritance(n: int = 2, max_length: int = 4):
    """Smallest pair x, y in W_aff(B_n) tau with x not <= y but embed(x) <= embed(y)."""
    bc = b_in_c(n)
    b = bc.source
    tau = _length_zero(b)
    coset = sorted((x for x in _ball(b, max_length) if x.omega == tau), key=ExtAffineElement.sort_key)
    for y in coset:
        for x in coset:
            if x.length > y.length or x == y:
                continue
            if not bruhat_leq(x, y) and bruhat_leq(bc.embed(x), bc.embed(y)):
                return x, y
    return None


def _ball(datum: RootDatum, radius: int) -> list:
    """Elements of W~ of length <= radius, built from length-zero elements."""
    omegas = {affine.identity(datum)}
    for lam in _small_lattice(datum):
        t = translation(datum, lam)
        omegas.add(t.omega)
    out = set(omegas)
    frontier = list(omegas)
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


def _small_lattice(datum: RootDatum) -> list:
    out = []
    for b in datum.lattice_basis:
        out.append(b)
        out.append(tuple(-a for a in b))
    return out


def ball(datum: RootDatum, radius: int) -> list:
    return _ball(datum, radius)
