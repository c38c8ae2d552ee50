import pytest

from admperm import verify
from admperm.oracles import Hull

QUICK = {
    "adm-in-perm": {}, "strong-in-adm": {}, "special-vertex-strong": {}, "direction-minimal": {"samples": 30},
    "cone-cover": {"samples": 30}, "extreme-cone": {}, "coweight-pair": {}, "fixed-datum": {"radius": 3},
    "half-roots": {}, "fixed-perm": {}, "odd-orthogonal-order": {}, "chamber-conv": {"radius": 2},
    "alcove-restriction": {"radius": 3, "samples": 50}, "odd-orthogonal-report": {},
}


@pytest.mark.parametrize("name", sorted(QUICK))
def test_statement_passes_on_defaults(name):
    v = verify.run(name, verify.Params(**QUICK[name]))
    assert v.passed, v.to_json()
    assert v.to_json()["schema"] == "verdict/1"


def test_every_statement_is_described():
    assert len(verify.REGISTRY) >= 30
    for name, (summary, fn) in verify.REGISTRY.items():
        assert name == name.lower() and " " not in name and summary


def test_failing_verdict_carries_a_witness(monkeypatch):
    monkeypatch.setattr(verify, "adm_by_descent", lambda d, mu: set())
    v = verify.run("adm-oracle", verify.Params())
    assert not v.passed and v.witness is not None


def test_hull_oracle_basics():
    h = Hull([(1, 0), (0, 1), (-1, 0), (0, -1)])
    assert h.contains((0, 0)) and not h.contains((1, 1)) and len(h.facets) == 4
    segment = Hull([(0, 0, 0), (2, 2, 0)])
    assert segment.contains((1, 1, 0)) and not segment.contains((1, 0, 0)) and not segment.contains((3, 3, 0))
