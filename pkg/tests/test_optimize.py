import numpy as np
import pytest

from tbvqa.optimize import (
    SearchSpace,
    Trial,
    TrialEvaluationError,
    best_trial_index,
    random_search,
    tpe_search,
    tpe_suggest,
)


def unit_space(num_orderings=1):
    return SearchSpace(dims=((0.0, 1.0),), num_orderings=num_orderings)


def quadratic(params, ordering_index, seed):
    return (params[0] - 0.7) ** 2


def test_space_validation():
    with pytest.raises(ValueError):
        SearchSpace(dims=((0.0, 1.0),), num_orderings=0)
    with pytest.raises(ValueError):
        SearchSpace(dims=((1.0, 0.0),), num_orderings=1)


def test_random_search_trial_count_and_layout():
    study = random_search(unit_space(3), 4, 3, quadratic, seed=0)
    assert len(study.trials) == 12
    assert [t.trial_index for t in study.trials] == list(range(12))
    assert [t.ordering_index for t in study.trials] == [0, 1, 2] * 4
    # same angle set across the ordering block
    for a in range(4):
        block = study.trials[3 * a : 3 * a + 3]
        assert len({t.params for t in block}) == 1


def test_random_search_single_trial():
    study = random_search(unit_space(), 1, 1, quadratic, seed=5)
    assert len(study.trials) == 1
    assert study.best_index == 0


def test_random_search_best_is_minimum():
    study = random_search(unit_space(), 50, 1, quadratic, seed=2)
    assert all(study.best.objective <= t.objective for t in study.trials)


def test_random_search_deterministic():
    a = random_search(unit_space(), 10, 1, quadratic, seed=3)
    b = random_search(unit_space(), 10, 1, quadratic, seed=3)
    assert a.trials == b.trials


def test_random_search_params_within_ranges():
    space = SearchSpace(dims=((0.0, 0.5), (2.0, 3.0)), num_orderings=2)
    study = random_search(space, 20, 2, lambda p, o, s: 0.0, seed=1)
    for t in study.trials:
        assert 0.0 <= t.params[0] <= 0.5
        assert 2.0 <= t.params[1] <= 3.0


def test_random_search_rejects_bad_budgets():
    with pytest.raises(ValueError):
        random_search(unit_space(), 0, 1, quadratic, seed=0)
    with pytest.raises(ValueError):
        random_search(unit_space(2), 1, 3, quadratic, seed=0)


def test_eval_failure_reports_trial():
    def broken(params, ordering_index, seed):
        if params[0] > -1:  # always
            raise RuntimeError("boom")
        return 0.0

    with pytest.raises(TrialEvaluationError) as err:
        random_search(unit_space(), 2, 1, broken, seed=0)
    assert err.value.trial_index == 0


def test_best_trial_tie_break():
    trials = [
        Trial(0, (0.0,), 0, 1.0, None, 0),
        Trial(1, (0.0,), 0, 0.5, None, 0),
        Trial(2, (0.0,), 0, 0.5, None, 0),
    ]
    assert best_trial_index(trials) == 1


def test_tpe_suggest_empty_history_in_range(rng):
    space = SearchSpace(dims=((0.0, 1.0), (2.0, 5.0)), num_orderings=4)
    params, ordering = tpe_suggest([], space, rng)
    assert 0.0 <= params[0] <= 1.0 and 2.0 <= params[1] <= 5.0
    assert 0 <= ordering < 4


def test_tpe_suggest_stays_in_range_after_history(rng):
    space = SearchSpace(dims=((0.0, 2.0),), num_orderings=3)
    history = [
        Trial(i, (float(rng.uniform(0, 2)),), int(rng.integers(3)), float(rng.normal()), None, 0)
        for i in range(40)
    ]
    for _ in range(50):
        params, ordering = tpe_suggest(history, space, rng)
        assert 0.0 <= params[0] <= 2.0
        assert 0 <= ordering < 3


def test_tpe_constant_objective_does_not_collapse(rng):
    space = SearchSpace(dims=((0.0, 2.0),), num_orderings=3)
    history = [
        Trial(i, (float(rng.uniform(0, 2)),), int(rng.integers(3)), 1.0, None, 0)
        for i in range(30)
    ]
    draws = [tpe_suggest(history, space, rng)[0][0] for _ in range(100)]
    assert len(set(np.round(draws, 9))) >= 20
    assert all(0.0 <= x <= 2.0 for x in draws)


def test_tpe_beats_random_on_quadratic():
    wins = 0
    for seed in range(20):
        tpe = tpe_search(unit_space(), 200, quadratic, seed=seed)
        rnd = random_search(unit_space(), 200, 1, quadratic, seed=seed)
        wins += tpe.best.objective < rnd.best.objective
    assert wins >= 16


def test_tpe_categorical_benchmark():
    space = unit_space(num_orderings=2)

    def by_category(params, ordering_index, seed):
        return float(ordering_index)

    study = tpe_search(space, 110, by_category, seed=0)
    post = [t for t in study.trials if t.trial_index >= 10]
    picked = sum(1 for t in post if t.ordering_index == 0)
    assert picked / len(post) >= 0.7


def test_tpe_initial_point():
    study = tpe_search(unit_space(3), 3, lambda p, o, s: p[0], seed=0,
                       initial_params=[0.1], initial_ordering=2)
    assert study.trials[0].params == (0.1,)
    assert study.trials[0].ordering_index == 2


def test_tpe_deterministic():
    a = tpe_search(unit_space(), 30, quadratic, seed=4)
    b = tpe_search(unit_space(), 30, quadratic, seed=4)
    assert a.trials == b.trials


def test_tpe_constant_liar_batch_runs():
    study = tpe_search(unit_space(), 40, quadratic, seed=1, batch_size=4)
    assert len(study.trials) == 40
    assert study.best.objective < 0.05


def test_tpe_rejects_zero_budget():
    with pytest.raises(ValueError):
        tpe_search(unit_space(), 0, quadratic, seed=0)
