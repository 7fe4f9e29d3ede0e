import pytest

from gfr.sampling import random_all_singletons_graph, sample_rng
from gfr.graph import is_connected
from gfr.internal import internal_sets_fast
from gfr.verify import SUITES, run_suite


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass_on_small_runs(suite):
    res = run_suite(suite, samples=25, seed=3, max_n=5)
    assert res.passed, [f.render() for f in res.failures]
    assert res.exit_code == 0
    assert res.checked >= 25


def test_cycle_four_is_whitelisted():
    res = run_suite("prop45", samples=5, seed=1)
    assert len(res.notes) == 1 and "cycle(4)" in res.notes[0]


def test_parallel_run_matches_serial():
    serial = run_suite("cor411", samples=20, seed=5, jobs=1)
    parallel = run_suite("cor411", samples=20, seed=5, jobs=2)
    assert serial.to_json() == parallel.to_json()


def test_samples_are_reproducible_and_varied():
    a = [random_all_singletons_graph(sample_rng(9, "lemma43", i)) for i in range(40)]
    b = [random_all_singletons_graph(sample_rng(9, "lemma43", i)) for i in range(40)]
    assert a == b
    assert all(is_connected(g) and internal_sets_fast(g).all_singletons for g in a)
    assert any(g.num_edges() >= len(g) for g in a), "sampler should not only produce trees"
    assert len({len(g) for g in a}) >= 5


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
