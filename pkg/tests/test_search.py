import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from pingpong.config import Configuration, canonical_form, is_alternating, is_canonical
from pingpong.search import (
    BoundTooLarge,
    ParityViolation,
    SearchBound,
    brute_force_configs,
    enumerate_configs,
    estimated_count,
    necklaces,
    random_config,
    relabel,
    sample_survey,
    survey,
    survey_configs,
    symmetry_key,
)
from pingpong.surface import classify


def least_rotations(counts):
    pool = [s for s, c in enumerate(counts) for _ in range(c)]
    return {min(p[i:] + p[:i] for i in range(len(p))) for p in set(itertools.permutations(pool))}


@pytest.mark.parametrize("counts", [(1, 1), (2, 1, 1), (2, 2, 1), (1, 1, 1, 1), (2, 2, 2, 1), (3, 1, 2)])
def test_necklaces_against_rotation_oracle(counts):
    got = list(necklaces(counts))
    assert got == sorted(got)
    assert set(got) == least_rotations(counts)
    assert len(got) == len(set(got))


def test_bound_validation():
    with pytest.raises(ValueError):
        SearchBound(1, max_k=1)
    with pytest.raises(ValueError):
        SearchBound(2)
    assert SearchBound(2, max_m=6).k_vectors() == [(1, 1), (1, 2), (2, 1)]


def test_small_counts():
    assert len(list(enumerate_configs(SearchBound(2, max_k=1)))) == 6
    assert len(list(enumerate_configs(SearchBound(3, max_k=1)))) == 120


def test_enumeration_is_canonical_and_exhaustive():
    bound = SearchBound(2, max_m=6)
    listed = list(enumerate_configs(bound))
    assert all(is_canonical(c) for c in listed)
    assert len(listed) == len(set(listed)) == 126
    assert set(listed) == brute_force_configs(bound)


def test_exhaustive_rank3_small():
    bound = SearchBound(3, max_k=1)
    assert set(enumerate_configs(bound)) == brute_force_configs(bound)


def test_estimate_is_close():
    for bound in (SearchBound(2, max_m=8), SearchBound(3, max_k=1), SearchBound(2, max_k=2)):
        actual = len(list(enumerate_configs(bound)))
        assert abs(estimated_count(bound) - actual) <= actual // 10


def test_ceiling_guard():
    with pytest.raises(BoundTooLarge):
        next(enumerate_configs(SearchBound(3, max_k=4), ceiling=10**6))


# regression values, produced by the enumeration above and cross-checked by brute force where feasible
def test_frozen_histograms():
    assert dict(survey(SearchBound(2, max_k=1)).histogram) == {1: 2, 3: 4}
    assert dict(survey(SearchBound(3, max_k=1)).histogram) == {2: 80, 4: 40}
    assert dict(survey(SearchBound(2, max_m=6)).histogram) == {1: 34, 3: 84, 5: 8}


@pytest.mark.slow
def test_frozen_histogram_m8():
    report = survey(SearchBound(2, max_m=8))
    assert report.total == 2238
    assert dict(report.histogram) == {1: 518, 3: 1448, 5: 260, 7: 12}
    assert canonical_form(Configuration.from_text(2, "BABabAba", (0, 1))) in report.isolated


def test_isolated_m4_are_alternating():
    report = survey(SearchBound(2, max_k=1))
    assert sorted("".join(map(str, c.word)) for c in report.isolated) == ["aBAb", "abAB"]
    assert all(is_alternating(c, g) for c in report.isolated for g in range(2))


def test_exotic_is_isolated_and_not_alternating(exotic):
    v = classify(exotic)
    assert v.isolated
    assert is_alternating(exotic, 0) and not is_alternating(exotic, 1)


def test_report_dict(exotic):
    report = survey_configs(2, [exotic, Configuration.from_text(2, "aAbB")])
    d = report.to_dict()
    assert d["total"] == 2 and d["histogram"] == {"1": 1, "3": 1}
    assert d["isolated_count"] == 1 and d["isolated_symmetry_classes"] == 1
    assert d["parity_violations"] == [] and d["defects"] == []


def test_sample_is_deterministic():
    one = sample_survey(3, 200, seed=5, max_k=2).to_dict()
    two = sample_survey(3, 200, seed=5, max_k=2).to_dict()
    assert one == two
    assert all(int(b) % 2 == 0 for b in one["histogram"])


def test_strict_mode_raises_on_parity_violation(monkeypatch):
    import pingpong.search as search

    monkeypatch.setattr(search, "_examine", lambda cfg: (cfg, 2, None))
    with pytest.raises(ParityViolation):
        survey_configs(2, [Configuration.from_text(2, "abAB")])
    rep = survey_configs(2, [Configuration.from_text(2, "abAB")], strict=False)
    assert len(rep.parity_violations) == 1


def test_parallel_matches_serial():
    bound = SearchBound(2, max_m=6)
    assert survey(bound, jobs=2).to_dict() == survey(bound).to_dict()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.permutations([0, 1, 2]), st.lists(st.booleans(), min_size=3, max_size=3))
def test_relabel_preserves_verdict(seed, perm, flips):
    cfg = random_config(random.Random(seed), 3, max_m=10)
    other = relabel(cfg, perm, flips)
    assert classify(other).boundary_count == classify(cfg).boundary_count
    assert symmetry_key(other) == symmetry_key(cfg)
