"""The mu-admissible, mu-permissible and strongly mu-permissible sets.

Also the finite Weyl group pairs whose coweight images are ordered without the
elements being Bruhat-comparable, and the permissible-but-not-admissible
elements built from them.
"""
from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import __version__
from .affine import (ExtAffineElement, bruhat_leq, compose, finite_element, lower_interval,
                     translation)
from .alcoves import Window, strong_frame, strong_set
from .errors import ConfigurationError, GuardExceeded
from .exact import add, common_denominator, scale, sub, vector
from .rootsys import (FiniteWeylElement, RootDatum, WeylPolytope, enumerate_finite_weyl,
                      longest_element, require_dominant, weyl_orbit)

PAIR_SEARCH_GUARD = 10 ** 4
SCHEMA = "musets/1"


def _check_mu(datum: RootDatum, mu) -> tuple:
    mu = require_dominant(datum, mu)
    if not datum.in_lattice(mu):
        raise ConfigurationError(f"mu={list(mu)} is not in the cocharacter lattice of {datum.name}")
    return tuple(int(a) for a in mu)


def _sorted(elements: Iterable[ExtAffineElement]) -> list:
    return sorted(elements, key=ExtAffineElement.sort_key)


def _perm_chunk(args) -> list:
    datum, mu, perms, points = args
    return _perm_scan(datum, mu, [FiniteWeylElement(datum, p) for p in perms], points)


def _perm_scan(datum: RootDatum, mu, ws, points) -> list:
    poly = WeylPolytope(datum, mu)
    verts = _scaled_vertices(datum)
    out = []
    for w in ws:
        shifts = [(q, tuple(int(c) for c in sub(w(a), a))) for q, a in verts]
        for lam in points:
            if all(poly.contains_scaled(tuple(q * l + c for l, c in zip(lam, s)), q)
                   for q, s in shifts):
                out.append((lam, w.perm))
    return out


def _scaled_vertices(datum: RootDatum) -> list:
    """(q, q * a) with integer entries for each base-alcove vertex a."""
    out = []
    for a in datum.base_alcove_vertices:
        q = common_denominator([a])
        out.append((q, tuple(int(c * q) for c in a)))
    return out


def enumerate_perm(datum: RootDatum, mu, jobs: int = 1,
                   candidate_filter: Callable[[ExtAffineElement], bool] | None = None,
                   finite_subset: Iterable[FiniteWeylElement] | None = None,
                   point_filter: Callable[[tuple], bool] | None = None) -> list:
    """Perm(mu): x in W_aff t_mu with x(a) - a in Conv(mu) for every base-alcove vertex a.

    Writing x = t_lam w, the vertex 0 forces lam into Conv(mu), and lam is congruent
    to mu modulo the coroot lattice exactly when x lies in the coset W_aff t_mu.
    The optional filters cut the search down to a subgroup of W~ (for instance the
    elements commuting with an automorphism): ``finite_subset`` limits w,
    ``point_filter`` limits lam and ``candidate_filter`` sees whole elements.
    """
    mu = _check_mu(datum, mu)
    ws = list(enumerate_finite_weyl(datum) if finite_subset is None else finite_subset)
    points = WeylPolytope(datum, mu).lattice_points
    if point_filter is not None:
        points = [p for p in points if point_filter(p)]
    if jobs > 1 and len(ws) > 1:
        chunks = [[w.perm for w in ws[i::jobs]] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_perm_chunk, [(datum, mu, c, points) for c in chunks])
            raw = [r for part in parts for r in part]
    else:
        raw = _perm_scan(datum, mu, ws, points)
    out = []
    for lam, perm in raw:
        x = ExtAffineElement(datum, tuple(int(a) for a in lam), FiniteWeylElement(datum, perm))
        if candidate_filter is None or candidate_filter(x):
            out.append(x)
    return _sorted(out)


def is_permissible(datum: RootDatum, mu, x: ExtAffineElement) -> bool:
    """Direct test of the defining condition, including the coset condition."""
    mu = _check_mu(datum, mu)
    if x.omega != translation(datum, mu).omega:
        return False
    poly = WeylPolytope(datum, mu)
    return all(poly.contains(sub(x(a), a)) for a in datum.base_alcove_vertices)


def extreme_translations(datum: RootDatum, mu) -> list:
    return [translation(datum, lam) for lam in weyl_orbit(datum, _check_mu(datum, mu))]


def is_admissible(datum: RootDatum, mu, x: ExtAffineElement) -> bool:
    return any(bruhat_leq(x, t) for t in extreme_translations(datum, mu))


def enumerate_adm(datum: RootDatum, mu, perm: list | None = None, jobs: int = 1) -> list:
    """Adm(mu), by filtering Perm(mu) (which contains it) with Bruhat comparisons."""
    mu = _check_mu(datum, mu)
    if perm is None:
        perm = enumerate_perm(datum, mu, jobs=jobs)
    tops = extreme_translations(datum, mu)
    return _sorted(x for x in perm if any(bruhat_leq(x, t) for t in tops))


def enumerate_adm_by_intervals(datum: RootDatum, mu) -> list:
    """Adm(mu) as the union of the lower Bruhat intervals below each t_lam."""
    out = set()
    for t in extreme_translations(datum, mu):
        out |= lower_interval(t)
    return _sorted(out)


def strong_sets(datum: RootDatum, mu) -> dict:
    """{(vertex index, w): B(t_{w mu}(a), w)} restricted to a + Conv(mu)."""
    mu = _check_mu(datum, mu)
    window = _perm_window(datum, mu)
    out = {}
    for w in enumerate_finite_weyl(datum):
        wmu = w(mu)
        for ai, a in enumerate(datum.base_alcove_vertices):
            out[(ai, w.perm)] = strong_set(datum, add(wmu, a), w, window)
    return out


def _rescale(v, q: int, D: int):
    """D * (v / q) as an integer vector, or None when it is not integral."""
    out = []
    for c in v:
        c = c * D
        if not isinstance(c, int):
            if c.denominator != 1:
                return None
            c = c.numerator
        if c % q:
            return None
        out.append(c // q)
    return tuple(out)


def _perm_window(datum: RootDatum, mu) -> Window:
    # every point of Conv(mu) is >= w_0 mu in the dominance order
    return Window(tuple(datum.simple_coroot_coords(sub(longest_element(datum)(mu), mu))))


def enumerate_perm_st(datum: RootDatum, mu, perm: list | None = None, jobs: int = 1) -> list:
    """Perm^st(mu): x(a) in B(t_{w mu}(a), w) for all vertices a and all w in W_0.

    Candidates come from Perm(mu), which contains Perm^st(mu) because each
    B(v, w) lies in v + w(B_0).
    """
    mu = _check_mu(datum, mu)
    if perm is None:
        perm = enumerate_perm(datum, mu, jobs=jobs)
    window = _perm_window(datum, mu)
    verts = list(zip(datum.base_alcove_vertices, _scaled_vertices(datum)))
    alive = list(perm)
    for w in enumerate_finite_weyl(datum):
        winv = w.inverse()
        wmu = w(mu)
        for a, (q, qa) in verts:
            D, pts = strong_frame(datum, add(wmu, a), w, window)
            kept = []
            for x in alive:
                # q * x(a), then into the w^{-1}-frame, then rescaled to D
                y = winv(tuple(q * l + c for l, c in zip(x.translation, x.finite(qa))))
                if _rescale(y, q, D) in pts:
                    kept.append(x)
            alive = kept
    return _sorted(alive)


@dataclass
class MuSetReport:
    datum: RootDatum
    mu: tuple
    adm: list
    perm: list
    perm_st: list
    extra: dict = field(default_factory=dict)

    @property
    def counts(self) -> dict:
        return {"adm": len(self.adm), "perm": len(self.perm), "perm_st": len(self.perm_st)}

    @property
    def perm_minus_adm(self) -> list:
        a = set(self.adm)
        return [x for x in self.perm if x not in a]

    @property
    def perm_minus_perm_st(self) -> list:
        s = set(self.perm_st)
        return [x for x in self.perm if x not in s]

    @property
    def verdicts(self) -> dict:
        a, p, s = set(self.adm), set(self.perm), set(self.perm_st)
        return {"adm_subset_perm": a <= p, "adm_eq_perm": a == p, "perm_eq_perm_st": p == s,
                "perm_st_subset_adm": s <= a}

    def to_json(self) -> dict:
        enc = lambda xs: [x.to_json() for x in xs]
        return {
            "schema": SCHEMA,
            "version": __version__,
            "datum": self.datum.name,
            "datum_fingerprint": self.datum.fingerprint,
            "mu": list(self.mu),
            "counts": self.counts,
            "verdicts": self.verdicts,
            "adm": enc(self.adm),
            "perm": enc(self.perm),
            "perm_st": enc(self.perm_st),
            "perm_minus_adm": enc(self.perm_minus_adm),
            "perm_minus_perm_st": enc(self.perm_minus_perm_st),
        }

    CSV_FIELDS = ("datum", "mu", "adm", "perm", "perm_st", "adm_subset_perm", "adm_eq_perm",
                  "perm_eq_perm_st", "perm_st_subset_adm")

    def csv_row(self) -> dict:
        return {"datum": self.datum.name, "mu": " ".join(map(str, self.mu)), **self.counts,
                **{k: str(v).lower() for k, v in self.verdicts.items()}}

    @classmethod
    def to_csv(cls, reports: Iterable["MuSetReport"]) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=cls.CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in reports:
            writer.writerow(r.csv_row())
        return buf.getvalue()


def compare(datum: RootDatum, mu, jobs: int = 1) -> MuSetReport:
    mu = _check_mu(datum, mu)
    perm = enumerate_perm(datum, mu, jobs=jobs)
    adm = enumerate_adm(datum, mu, perm=perm)
    perm_st = enumerate_perm_st(datum, mu, perm=perm)
    report = MuSetReport(datum, mu, adm, perm, perm_st)
    if not report.verdicts["adm_subset_perm"]:
        raise AssertionError("Adm(mu) must lie in Perm(mu)")
    return report


# -- coweight-ordered pairs in W_0 -----------------------------------------------

def _coweight_images(datum: RootDatum, w: FiniteWeylElement) -> tuple:
    return tuple(c for wt in datum.fundamental_coweights
                 for c in datum.simple_coroot_coords(w(wt)))


def coweight_order_criterion(datum: RootDatum, w: FiniteWeylElement, w2: FiniteWeylElement) -> bool:
    """w(lam) - w2(lam) is a sum of positive coroots for every dominant coweight lam."""
    a, b = _coweight_images(datum, w), _coweight_images(datum, w2)
    return all(x >= y for x, y in zip(a, b))


def search_coweight_pair(datum: RootDatum, guard: int = PAIR_SEARCH_GUARD):
    """First (w, w2) in shortlex order with w != w2, equal length, and the criterion."""
    ws = enumerate_finite_weyl(datum, guard=guard)
    if len(ws) > guard:
        raise GuardExceeded(f"|W0| = {len(ws)} exceeds {guard}")
    images = [_coweight_images(datum, w) for w in ws]
    for i, w in enumerate(ws):
        for j, w2 in enumerate(ws):
            if i == j or w.length != w2.length:
                continue
            if all(x >= y for x, y in zip(images[i], images[j])):
                return w, w2
    return None


def regular_coroot_step(datum: RootDatum) -> tuple:
    """The least multiple m * rho^vee lying in both the coroot lattice and X_*."""
    rho = vector([0] * datum.ambient_dim)
    for c in datum.fundamental_coweights:
        rho = add(rho, c)
    m = 1
    while not (datum.in_coroot_lattice(scale(m, rho)) and datum.in_lattice(scale(m, rho))):
        m += 1
    return tuple(int(a) for a in scale(m, rho))


def build_counterexample(datum: RootDatum, mu, w: FiniteWeylElement, w2: FiniteWeylElement) -> ExtAffineElement:
    """x = t_{w^{-1} mu} w^{-1} w2, permissible but not admissible."""
    mu = _check_mu(datum, mu)
    if w == w2 or w.length != w2.length or not coweight_order_criterion(datum, w, w2):
        raise ConfigurationError("(w, w2) is not an ordered equal-length pair")
    if not datum.is_regular(mu) or not datum.in_coroot_lattice(mu):
        raise ConfigurationError("mu must be regular and in the coroot lattice")
    if not is_sufficiently_regular(datum, mu, w, w2):
        raise ConfigurationError("mu is not sufficiently regular for this pair")
    return _candidate(datum, mu, w, w2)


def _candidate(datum, mu, w, w2) -> ExtAffineElement:
    winv = w.inverse()
    return compose(translation(datum, winv(mu)), finite_element(winv * w2))


def is_sufficiently_regular(datum: RootDatum, mu, w: FiniteWeylElement, w2: FiniteWeylElement) -> bool:
    """x(a) - a lies in w^{-1}(closed dominant chamber) for every vertex a."""
    mu = _check_mu(datum, mu)
    x = _candidate(datum, mu, w, w2)
    return all(datum.is_dominant(w(sub(x(a), a))) for a in datum.base_alcove_vertices)


def escalate_regular(datum: RootDatum, w, w2, limit: int = 64) -> tuple:
    """Least N with mu = N * regular_coroot_step sufficiently regular."""
    step = regular_coroot_step(datum)
    for n in range(1, limit + 1):
        mu = tuple(n * a for a in step)
        if is_sufficiently_regular(datum, mu, w, w2):
            return mu, n
    raise GuardExceeded(f"no sufficiently regular multiple up to {limit}")


@dataclass
class CounterexampleWitness:
    datum: RootDatum
    w: FiniteWeylElement
    w2: FiniteWeylElement
    mu: tuple
    multiple: int
    x: ExtAffineElement
    length_matches: bool
    permissible: bool
    admissible: bool

    @property
    def ok(self) -> bool:
        return self.length_matches and self.permissible and not self.admissible

    def to_json(self) -> dict:
        return {
            "schema": "counterexample/1",
            "version": __version__,
            "datum": self.datum.name,
            "datum_fingerprint": self.datum.fingerprint,
            "w_word": list(self.w.word),
            "w2_word": list(self.w2.word),
            "mu": list(self.mu),
            "multiple": self.multiple,
            "element": self.x.to_json(),
            "length_equals_length_of_t_mu": self.length_matches,
            "permissible": self.permissible,
            "admissible": self.admissible,
            "verified": self.ok,
        }


def counterexample_pipeline(datum: RootDatum, limit: int = 64) -> CounterexampleWitness | None:
    pair = search_coweight_pair(datum)
    if pair is None:
        return None
    w, w2 = pair
    mu, n = escalate_regular(datum, w, w2, limit)
    x = build_counterexample(datum, mu, w, w2)
    return CounterexampleWitness(
        datum, w, w2, mu, n, x,
        length_matches=x.length == translation(datum, mu).length,
        permissible=is_permissible(datum, mu, x),
        admissible=is_admissible(datum, mu, x),
    )
