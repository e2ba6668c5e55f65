import pytest

from flatcheck.errors import InputError
from flatcheck.rings import ProductRing, SeqRing, ZMod
from flatcheck.suites import SUITES, SuiteConfig, run_suite, worker_count

SMALL = (ZMod(4), ZMod(6), ProductRing((ZMod(2), ZMod(2))))


@pytest.mark.parametrize("name", SUITES)
def test_every_suite_passes_on_small_rings(name):
    res = run_suite(SuiteConfig(name, SMALL, gen_bound=1, rel_bound=1))
    assert res.passed and res.failure is None
    assert res.instances > 0


def test_worker_processes_do_not_change_output(monkeypatch):
    cfg = SuiteConfig("lemma7", SMALL, gen_bound=2, rel_bound=1)
    monkeypatch.setenv("FLATCHECK_THREADS", "1")
    serial = run_suite(cfg).to_json()
    monkeypatch.setenv("FLATCHECK_THREADS", "3")
    assert worker_count() == 3
    assert run_suite(cfg).to_json() == serial


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("FLATCHECK_THREADS", "many")
    with pytest.raises(InputError):
        worker_count()


def test_seq_ring_laws():
    res = run_suite(SuiteConfig("ringlaws", (SeqRing(ZMod(2)),)))
    assert res.passed and res.instances >= 1000


def test_finite_only_suites_reject_seq():
    with pytest.raises(InputError):
        run_suite(SuiteConfig("th4", (SeqRing(ZMod(2)),)))


def test_config_parsing():
    cfg = SuiteConfig.from_json({"suite": "th3", "rings": [{"kind": "zmod", "n": 8}], "seed": 3})
    assert cfg.suite == "th3" and cfg.rings == (ZMod(8),) and cfg.seed == 3
    with pytest.raises(InputError):
        SuiteConfig.from_json({"suite": "unknown"})
    with pytest.raises(InputError):
        SuiteConfig.from_json([], "th4")


def test_fault_injection_is_caught():
    res = run_suite(SuiteConfig("th4", (ZMod(4),), gen_bound=1, rel_bound=1), corrupt_oracle=True)
    assert not res.passed and res.failure["ring"] == {"kind": "zmod", "n": 4}
