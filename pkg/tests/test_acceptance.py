"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import time

from admperm import musets, steinberg, verify
from admperm.rootsys import build_root_datum

LINES: list[str] = []


def report(number: int, ok: bool, what: str, started: float, limit: float) -> None:
    elapsed = time.perf_counter() - started
    ok = ok and elapsed < limit
    LINES.append(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {what}  "
                 f"[{elapsed:.1f}s, limit {limit:.0f}s]")
    print(LINES[-1])
    assert ok, LINES[-1]


def grid(datum) -> list:
    """Dominant mu with coordinates bounded by 2 (sum-zero data allow negative entries)."""
    if datum.family in ("A", "G"):
        return verify.dominant_grid(datum, 2)
    return verify.nonneg_grid(datum, 2)


def test_criterion_01_odd_orthogonal_counts():
    t = time.perf_counter()
    c = steinberg.odd_orthogonal_counts(2, (1, 0)).counts
    ok = c["adm_B"] == 13 and c["perm_host_cap_B"] == 19 and c["adm_C"] == 19
    report(1, ok, f"B2 mu=(1,0): |Adm^B|={c['adm_B']}, |Perm^A4 cap W(B2)|={c['perm_host_cap_B']}, "
                  f"|Adm^C|={c['adm_C']}", t, 10)


def test_criterion_02_non_inheritance():
    t = time.perf_counter()
    r = steinberg.non_inheritance_witness(2)
    ok = (not r["s0_leq_s1"] and not r["s1_leq_s0"] and r["image_of_s0_is_s0s1s0"]
          and r["image_of_s1_is_s1"] and r["images_related"])
    report(2, ok, "s0, s1 incomparable in W_aff(B2); s1' <= s0's1's0' in W_aff(C2)", t, 1)


def test_criterion_03_gl_equality():
    t = time.perf_counter()
    bad, total = [], 0
    for n in (2, 3, 4):
        d = build_root_datum("GL", n)
        for mu in grid(d):
            r = musets.compare(d, mu)
            total += 1
            if not (r.verdicts["adm_eq_perm"] and r.verdicts["perm_eq_perm_st"]):
                bad.append((d.name, mu))
    report(3, not bad, f"GL(2..4), {total} mu: Adm = Perm = Perm^st; failures {bad}", t, 300)


def test_criterion_04_inclusions():
    t = time.perf_counter()
    bad, total, unequal = [], 0, []
    for fam, size in [("A", 2), ("B", 2), ("C", 2), ("G", 2), ("A", 3), ("B", 3), ("C", 3)]:
        d = build_root_datum(fam, size)
        for mu in grid(d):
            r = musets.compare(d, mu)
            total += 1
            if not (r.verdicts["adm_subset_perm"] and r.verdicts["perm_st_subset_adm"]):
                bad.append((d.name, mu))
            if not r.verdicts["adm_eq_perm"]:
                unequal.append((d.name, mu))
    report(4, not bad, f"{total} (datum, mu): Adm in Perm and Perm^st in Adm; failures {bad}; "
                       f"Adm != Perm at {unequal}", t, 600)


def _gsp_grid(d) -> list:
    return verify.nonneg_grid(d, 2)


def test_criterion_05_symplectic():
    t = time.perf_counter()
    bad, checked = [], 0
    for m in (4, 6):
        d = build_root_datum("GSp", m)
        theta = steinberg.build_theta(build_root_datum("GL", m))
        n = m // 2
        for mu in _gsp_grid(d):
            adm = set(musets.enumerate_adm(d, mu))
            if set(steinberg.adm_theta_via_perm(theta, mu)) != adm:
                bad.append(("host", d.name, mu))
            if mu == (mu[0],) * n + (mu[n],) * n:
                if set(musets.enumerate_perm(d, mu)) != adm:
                    bad.append(("perm", d.name, mu))
            checked += 1
    report(5, not bad, f"GSp(4), GSp(6), {checked} mu: Adm = Perm for (a^n,b^n) and "
                       f"Adm = Perm^GL cap W^Theta; failures {bad}", t, 600)


def test_criterion_06_counterexamples():
    t = time.perf_counter()
    found = {}
    for fam in ("B", "C", "D"):
        w = musets.counterexample_pipeline(build_root_datum(fam, 4))
        found[f"{fam}4"] = None if w is None else (w.ok, list(w.mu))
    ok = all(v is not None and v[0] for v in found.values())
    report(6, ok, f"x in Perm, x not in Adm, l(x) = l(t_mu): {found}", t, 600)


def test_criterion_07_fixed_points():
    t = time.perf_counter()
    names = ["bruhat-inheritance", "cone-restriction", "halfspace-restriction", "alcove-restriction"]
    results = {}
    for name in names:
        v = verify.run(name, verify.Params(family="GL", size=4, radius=5, samples=200))
        results[name] = (v.passed, v.checked)
    ok = all(p for p, _ in results.values())
    report(7, ok, f"GL(4)/Theta radius 5: {results}", t, 300)


def test_criterion_08_coweight_order():
    t = time.perf_counter()
    results = {}
    for n in (3, 4, 5):
        v = verify.run("coweight-order", verify.Params(family="GL", size=n))
        results[f"S{n}"] = (v.passed, v.checked)
    report(8, all(p for p, _ in results.values()), f"criterion <=> Bruhat: {results}", t, 60)


PROPERTY_STATEMENTS = ["direction-minimal", "pointed-in-acute", "cone-cover", "translation-in-cone",
                       "acute-halfspace", "lifting", "length-additivity", "parabolic-bruhat"]


def test_criterion_09_property_suites():
    t = time.perf_counter()
    failures, low = [], []
    for fam, size, n in [("B", 2, 200), ("C", 2, 200), ("G", 2, 200), ("A", 2, 200), ("B", 3, 50), ("C", 3, 50)]:
        for name in PROPERTY_STATEMENTS:
            v = verify.run(name, verify.Params(family=fam, size=size, samples=n, radius=4, seed=7))
            if not v.passed:
                failures.append((name, v.datum))
            if v.checked < n:
                low.append((name, v.datum, v.checked))
    report(9, not failures and not low,
           f"{len(PROPERTY_STATEMENTS)} statements x 6 data; failures {failures}; under-sampled {low}", t, 600)


def test_criterion_10_oracles():
    t = time.perf_counter()
    bad, n_adm, n_conv = [], 0, 0
    for n in (2, 3, 4):
        d = build_root_datum("GL", n)
        for mu in grid(d):
            v = verify.run("adm-oracle", verify.Params(family="GL", size=n, mu=mu))
            n_adm += 1
            if not v.passed:
                bad.append(("adm", d.name, mu))
    for fam, size in [("A", 2), ("B", 2), ("C", 2), ("G", 2), ("A", 3), ("B", 3), ("C", 3)]:
        d = build_root_datum(fam, size)
        for mu in grid(d):
            v = verify.run("conv-oracle", verify.Params(family=fam, size=size, mu=mu))
            n_conv += v.checked
            if not v.passed:
                bad.append(("conv", d.name, mu))
    report(10, not bad, f"{n_adm} Adm oracle comparisons, {n_conv} Conv lattice points; failures {bad}", t, 600)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(LINES))
