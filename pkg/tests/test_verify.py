import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce as bf
from perfcode import (
    TrialConfig,
    check_theorem,
    cycle_graph,
    from_edge_list,
    gen_random_chordal,
    gen_random_graph,
    is_chordal,
    path_graph,
    run_campaign,
    square,
)
from perfcode.verify import (
    _find_induced_c4s,
    _recheck_counterexample,
    _split_seed,
    enumerate_all_graphs,
)


def test_gen_random_graph_extremes():
    assert gen_random_graph(5, 0.0, 1).edge_count == 0
    assert gen_random_graph(5, 1.0, 1).edge_count == 10


def test_gen_random_graph_is_seed_deterministic():
    a = gen_random_graph(9, 0.4, 123)
    b = gen_random_graph(9, 0.4, 123)
    c = gen_random_graph(9, 0.4, 124)
    assert list(a.edges()) == list(b.edges())
    assert list(a.edges()) != list(c.edges())


def test_gen_random_graph_rejects_bad_p():
    with pytest.raises(ValueError):
        gen_random_graph(4, 1.5, 0)


def test_gen_random_chordal_single_vertex():
    g = gen_random_chordal(1, 0.5, 0)
    assert g.n == 1 and g.edge_count == 0


def test_gen_random_chordal_zero_fill_is_tree():
    g = gen_random_chordal(12, 0.0, 5)
    assert g.edge_count == g.n - 1
    assert bf.is_chordal(g.n, list(g.edges()))


@given(st.integers(1, 25), st.floats(0.0, 1.0), st.integers(0, 2**32 - 1))
@settings(max_examples=80, deadline=None)
def test_gen_random_chordal_is_chordal(n, fill, seed):
    g = gen_random_chordal(n, fill, seed)
    assert is_chordal(g)[0]


def test_split_seed_is_stable_and_distinct():
    assert _split_seed(42, 0) == _split_seed(42, 0)
    assert _split_seed(42, 0) != _split_seed(42, 1)
    assert _split_seed(42, 1) != _split_seed(43, 1)


def test_enumerate_all_graphs_counts():
    counts = {}
    for g in enumerate_all_graphs(4):
        counts[g.n] = counts.get(g.n, 0) + 1
    assert counts == {0: 1, 1: 1, 2: 2, 3: 8, 4: 64}


# -- single-trial verdicts ------------------------------------------------------

def test_t1_vacuous_on_c6():
    # C6 has an e.d. but is itself a forbidden hole
    verdict = check_theorem(cycle_graph(6), "T1")
    assert verdict.status == "vacuous"


def test_t2_held_on_c6():
    verdict = check_theorem(cycle_graph(6), "T2")
    assert verdict.status == "held"


def test_t1_held_on_p4():
    verdict = check_theorem(path_graph(4), "T1")
    assert verdict.status == "held"


def test_t3_trivial_hold_is_flagged():
    verdict = check_theorem(path_graph(4), "T3")
    assert verdict.status == "held" and not verdict.informative


def test_vacuous_when_no_ed():
    # C4 is (P6,HHD)-free but has no e.d.
    verdict = check_theorem(cycle_graph(4), "T1")
    assert verdict.status == "vacuous"


def test_skip_verdicts_over_budget():
    # ten disjoint edges: P6-free, HHD-free, with an obvious e.d.
    big = from_edge_list(20, [(2 * i, 2 * i + 1) for i in range(10)])
    assert check_theorem(big, "T3").status == "skipped"
    assert check_theorem(big, "T2", budget=10).status == "skipped"
    assert check_theorem(big, "T1", budget=10).status == "held"  # polynomial check


def test_check_theorem_rejects_unknown_id():
    with pytest.raises(ValueError):
        check_theorem(path_graph(3), "T9")


def test_find_induced_c4s_on_octahedron():
    sq = square(cycle_graph(6))
    quads = _find_induced_c4s(sq)
    assert len(quads) == 3  # octahedron: one C4 per antipodal pair choice
    for a, b, c, d in quads:
        assert sq.adjacent(a, b) and sq.adjacent(b, c)
        assert sq.adjacent(c, d) and sq.adjacent(d, a)
        assert not sq.adjacent(a, c) and not sq.adjacent(b, d)


def test_c4dom_holds_on_small_corpus():
    held = 0
    for g in enumerate_all_graphs(5):
        verdict = check_theorem(g, "C4-dom")
        assert verdict.status in ("held", "vacuous")
        held += verdict.status == "held"
    assert held > 0


def test_c4dom_informative_on_c6():
    # the octahedron square of C6 has an induced C4 avoiding each e.d.,
    # and its four vertices are covered by exactly two dominators
    verdict = check_theorem(cycle_graph(6), "C4-dom")
    assert verdict.status == "held" and verdict.informative


def test_t3_trivial_on_c6():
    # square has only 6 vertices, too small for an odd antihole
    verdict = check_theorem(cycle_graph(6), "T3")
    assert verdict.status == "held" and not verdict.informative


def test_recheck_accepts_consistent_record_and_rejects_tampering():
    # P4 plus an isolated vertex: in every class, e.d. {0,3,4}, and its
    # square contains the triangle 0,1,2
    record = {
        "theorem": "T1",
        "n": 5,
        "edges": [[0, 1], [1, 2], [2, 3]],
        "ed": [0, 3, 4],
        "witness": ["C3", [0, 1, 2]],
    }
    _recheck_counterexample(record)
    bad_ed = dict(record, ed=[0, 1])
    with pytest.raises(AssertionError, match="invalid e.d."):
        _recheck_counterexample(bad_ed)
    bad_witness = dict(record, witness=["C3", [0, 1, 4]])
    with pytest.raises(AssertionError, match="witness"):
        _recheck_counterexample(bad_witness)
    out_of_class = dict(record, edges=[list(e) for e in cycle_graph(5).edges()], n=5, ed=[0])
    with pytest.raises(AssertionError, match="class"):
        _recheck_counterexample(out_of_class)


# -- campaigns ------------------------------------------------------------------

def test_trial_config_validation():
    with pytest.raises(ValueError, match="unknown theorem"):
        TrialConfig("T0")
    with pytest.raises(ValueError, match="random trials or an exhaustive"):
        TrialConfig("T1")
    with pytest.raises(ValueError, match="budget"):
        TrialConfig("T2", trials=5, n_range=(7, 40), budget=30)
    with pytest.raises(ValueError, match="probability"):
        TrialConfig("T2", trials=5, p_range=(0.5, 1.5))


def test_exhaustive_t1_campaign_holds():
    report = run_campaign(TrialConfig("T1", exhaustive_n=4))
    assert report.trials == 76
    assert not report.counterexamples
    assert report.held + report.vacuous + report.skipped == report.trials
    assert report.held > 0


def test_campaign_reports_are_reproducible():
    config = TrialConfig("T4", seed=99, trials=40, n_range=(7, 10))
    first = run_campaign(config)
    second = run_campaign(config)
    assert first.to_document() == second.to_document()
    assert json.dumps(first.to_document()) == json.dumps(second.to_document())
    assert first.wall_clock_s != 0.0
    assert "wall" not in json.dumps(first.to_document())


def test_campaign_accounting_and_text():
    report = run_campaign(TrialConfig("T3", seed=5, trials=60, n_range=(7, 12)))
    assert report.trials == 60
    assert report.held + report.vacuous + report.skipped == 60
    assert report.held_trivially <= report.held
    text = report.to_text()
    assert "theorem T3" in text and "0 counterexample(s)" in text


def test_campaign_seed_changes_outcomes():
    a = run_campaign(TrialConfig("T2", seed=1, trials=30, n_range=(7, 10)))
    b = run_campaign(TrialConfig("T2", seed=2, trials=30, n_range=(7, 10)))
    assert (a.held, a.vacuous) != (b.held, b.vacuous)
