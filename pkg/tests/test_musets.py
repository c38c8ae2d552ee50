import pytest

from admperm import musets
from admperm.errors import ConfigurationError
from admperm.rootsys import build_root_datum
from admperm.verify import adm_by_descent

# frozen from the reflection-closure oracle (adm_by_descent), computed independently
# of both Perm filtering and the interval union
FROZEN_ADM = {
    ("GL", 2, (1, 0)): 3,
    ("GL", 3, (1, 0, 0)): 7,
    ("GL", 3, (2, 1, 0)): 25,
    ("GL", 4, (1, 1, 0, 0)): 33,
    ("GL", 4, (2, 1, 1, 0)): 105,
    ("B", 2, (1, 0)): 13,
    ("C", 2, (1, 0)): 19,
    ("C", 2, (1, 1)): 41,
    ("G", 2, (-1, 0, 1)): 41,
    ("GSp", 4, (1, 1, 0, 0)): 13,
    ("B", 3, (1, 1, 0)): 189,
}


@pytest.mark.parametrize("key,count", sorted(FROZEN_ADM.items()))
def test_adm_counts(key, count):
    d = build_root_datum(key[0], key[1])
    assert len(musets.enumerate_adm(d, key[2])) == count


@pytest.mark.parametrize("key", [("GL", 3, (2, 1, 0)), ("C", 2, (2, 1)), ("G", 2, (-1, 0, 1))])
def test_adm_three_ways(key):
    d = build_root_datum(key[0], key[1])
    a = set(musets.enumerate_adm(d, key[2]))
    assert a == set(musets.enumerate_adm_by_intervals(d, key[2])) == adm_by_descent(d, key[2])


def test_perm_parallel_matches_serial():
    d = build_root_datum("C", 2)
    assert musets.enumerate_perm(d, (2, 1), jobs=2) == musets.enumerate_perm(d, (2, 1), jobs=1)


def test_zero_coweight():
    d = build_root_datum("GL", 2)
    r = musets.compare(d, (0, 0))
    assert r.counts == {"adm": 1, "perm": 1, "perm_st": 1}
    assert r.adm[0].is_identity()


def test_b3_sets_differ_above_minuscule():
    d = build_root_datum("B", 3)
    r = musets.compare(d, (1, 1, 1))
    assert r.counts == {"adm": 219, "perm": 227, "perm_st": 219}
    x = r.perm_minus_adm[0]
    assert musets.is_permissible(d, (1, 1, 1), x) and not musets.is_admissible(d, (1, 1, 1), x)


def test_non_dominant_mu_is_rejected():
    d = build_root_datum("B", 2)
    with pytest.raises(ConfigurationError, match="not dominant"):
        musets.compare(d, (0, 1))
    with pytest.raises(ConfigurationError):
        musets.compare(d, (1, 0, 0))


def test_report_serialization():
    d = build_root_datum("B", 2)
    r = musets.compare(d, (1, 0))
    j = r.to_json()
    assert j["schema"] == "musets/1" and j["counts"]["adm"] == 13
    csv = musets.MuSetReport.to_csv([r])
    assert csv.splitlines()[0].startswith("datum,mu,adm")
    assert csv.splitlines()[1].startswith("B2,1 0,13,13,13")


def test_coweight_pairs_only_from_rank_four():
    assert musets.search_coweight_pair(build_root_datum("C", 3)) is None
    assert musets.search_coweight_pair(build_root_datum("GL", 5)) is None
    w, w2 = musets.search_coweight_pair(build_root_datum("D", 4))
    assert w.length == w2.length and w != w2


def test_counterexample_d4():
    wit = musets.counterexample_pipeline(build_root_datum("D", 4))
    assert wit.ok
    assert wit.to_json()["schema"] == "counterexample/1"
