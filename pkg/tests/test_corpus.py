import pytest

from normalmono import corpus
from normalmono.corpus import EXAMPLES, eg10_monoid, eg9_monoid, example_corpus
from normalmono.effective import violates
from normalmono.errors import CorpusMismatch


@pytest.fixture(scope="module")
def results():
    return {r.key: r for r in example_corpus()}


@pytest.mark.parametrize("key", sorted(EXAMPLES))
def test_example_passes(results, key):
    r = results[key]
    failed = [name for name, ok in r.checks.items() if not ok]
    assert r.passed and not failed


def test_every_check_recorded(results):
    assert all(r.checks for r in results.values())
    assert results["A"].detail["zeroClass"] == ["1", "2", "3"]


def test_bound_override():
    out = {r.key: r for r in example_corpus(bound=4)}
    assert out["C"].detail["P"]["bound"] == 4
    assert out["G"].detail["Dedekind"]["bound"] == 4
    assert all(r.passed for r in out.values())


def test_strict_mode_raises(monkeypatch):
    broken = corpus._result("A", "forced failure", {"never": False}, {})
    monkeypatch.setitem(corpus.EXAMPLES, "A", lambda: broken)
    with pytest.raises(CorpusMismatch) as exc:
        example_corpus(strict=True)
    assert exc.value.failing == ["A"]


def test_integers_witnesses_both_replay():
    Z = corpus.integers_add(lambda z: z >= 0)
    assert violates(Z, "C", (0, -1, 1))
    assert violates(Z, "C", (-1, 0, 1))


def test_star_counterexample_values():
    E = eg9_monoid()
    x, y, s, t = (E.generators[k] for k in "xyst")
    ts = E.multiply(t, s)
    assert [ts(n) for n in range(4)] == [5, 1, 2, 3]
    assert E.multiply(y, x)(0) == 1


def test_power_membership():
    E, power = eg10_monoid(40)
    assert E.member(power(0)) and E.member(power(3))
    assert not E.member(E.generators["g"])
    assert power(2)(5) == 20
