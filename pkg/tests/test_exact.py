from random import Random

import pytest

from hadclique import (
    CandidateOverflow,
    InvalidClique,
    Clique,
    ExactSearchConfig,
    brute_adjacency_codes,
    clique_from_codes,
    decode,
    extend_exact,
    run_exact,
    verify_clique,
)


def test_config_validation():
    with pytest.raises(ValueError):
        ExactSearchConfig(t=0)
    with pytest.raises(ValueError):
        ExactSearchConfig(t=2, essays=0)
    with pytest.raises(ValueError):
        ExactSearchConfig(t=2, candidate_cap=0)


def test_every_essay_hits_known_max_small_t():
    for t, want in [(2, 5), (3, 9), (4, 13)]:
        rep = run_exact(ExactSearchConfig(t=t, essays=10, rng_seed=0))
        assert [len(e.clique) for e in rep.essays] == [want] * 10
        for e in rep.essays:
            assert verify_clique(e.clique), (t, e.index)


def test_outputs_are_oracle_maximal():
    # no vertex of G_t extends any produced clique (t small enough to scan)
    for t in (2, 3):
        rep = run_exact(ExactSearchConfig(t=t, essays=4, rng_seed=1))
        for e in rep.essays:
            members = set(e.clique.codes)
            common = None
            for v in e.clique.members:
                nbrs = set(brute_adjacency_codes(v).tolist())
                common = nbrs if common is None else common & nbrs
            assert not (common - members)


def test_deterministic_under_seed_and_jobs():
    a = run_exact(ExactSearchConfig(t=3, essays=6, rng_seed=9))
    b = run_exact(ExactSearchConfig(t=3, essays=6, rng_seed=9))
    c = run_exact(ExactSearchConfig(t=3, essays=6, rng_seed=9), jobs=3)
    assert [e.clique.codes for e in a.essays] == [e.clique.codes for e in b.essays]
    assert [e.clique.codes for e in a.essays] == [e.clique.codes for e in c.essays]


def test_distinct_seeds_vary():
    a = run_exact(ExactSearchConfig(t=4, essays=1, rng_seed=0))
    b = run_exact(ExactSearchConfig(t=4, essays=1, rng_seed=1))
    assert a.essays[0].clique.codes != b.essays[0].clique.codes


def test_start_vertex_is_kept():
    v = decode(684646, 5)
    rep = run_exact(ExactSearchConfig(t=5, essays=2, rng_seed=0, start_vertex=v))
    for e in rep.essays:
        assert 684646 in e.clique.codes


def test_overflow_marks_essay():
    # a cap of 1 candidate cannot hold any adjacency slab
    rep = run_exact(ExactSearchConfig(t=3, essays=2, rng_seed=0, candidate_cap=1))
    assert all(e.overflow for e in rep.essays)
    assert all(len(e.clique) >= 1 for e in rep.essays)


def test_time_limit_still_produces_one_essay():
    rep = run_exact(ExactSearchConfig(t=3, essays=50, rng_seed=0), time_limit=0.0)
    assert len(rep.essays) >= 1


def test_report_shape():
    rep = run_exact(ExactSearchConfig(t=2, essays=3, rng_seed=5))
    assert rep.algorithm == "exact"
    assert rep.t == 2
    assert len(rep.best) == 5
    assert rep.depth == 8
    assert dict(rep.config)["rng_seed"] == 5


def test_extend_exact_grows_to_maximal():
    rng = Random(0)
    base = clique_from_codes(2, [166, 101])
    out = extend_exact(base, rng)
    assert set(base.codes) <= set(out.codes)
    assert len(out) == 5
    assert verify_clique(out)


def test_extend_exact_empty_input_starts_fresh():
    out = extend_exact(Clique(t=3, members=()), Random(1))
    assert len(out) == 9
    assert verify_clique(out)


def test_extend_exact_rejects_invalid_input():
    with pytest.raises(InvalidClique):
        extend_exact(clique_from_codes(2, [166, 89]), Random(0))


def test_extend_exact_candidate_cap():
    with pytest.raises(CandidateOverflow):
        extend_exact(Clique(t=5, members=()), Random(0), candidate_cap=10)
