"""Seeded generation and exhaustive enumeration of states and pools."""

import random
from fractions import Fraction

import pytest

from audit.generator import (
    enumerate_states,
    formula_pool,
    random_propositions,
    random_state,
    small_universe,
)
from logic.semantics import truth_set
from revision import cores_of, is_consistent, is_universal
from state.model_file import dump_model
from state.schemas import GeneratorParams


def test_same_seed_same_state():
    assert random_state(GeneratorParams(seed=1)) == random_state(GeneratorParams(seed=1))


def test_thousand_seeds_give_valid_states():
    for seed in range(1000):
        state = random_state(GeneratorParams(seed=seed))
        assert not state.abnormal_flag
        assert 1 <= len(state.atoms) <= 4
        assert len(state.universe) == 2 ** len(state.atoms)
        assert len(state.ranks) <= 4
        assert all(sum(r.weights.values()) == 1 for r in state.ranks)


def test_no_exclusions_gives_universal_states():
    for seed in range(200):
        state = random_state(GeneratorParams(seed=seed, non_entertainable_fraction=0))
        assert is_universal(state) and is_consistent(state)


def test_single_rank_clamp():
    for seed in range(50):
        assert len(random_state(GeneratorParams(seed=seed, max_ranks=1)).ranks) == 1


def test_full_exclusion_keeps_one_world():
    state = random_state(GeneratorParams(seed=3, non_entertainable_fraction=1))
    assert len(cores_of(state).outermost) == 1


def test_weights_respect_the_bound():
    state = random_state(GeneratorParams(seed=11, weight_denominator_bound=1))
    for rank in state.ranks:
        assert len(set(rank.weights.values())) == 1
        assert all(w == Fraction(1, len(rank.weights)) for w in rank.weights.values())


def test_small_universe():
    atoms, universe = small_universe(3)
    assert atoms == ("p0", "p1")
    assert [w.id for w in universe] == ["w0", "w1", "w2"]
    with pytest.raises(ValueError):
        small_universe(0)


@pytest.mark.parametrize("n, count", [(1, 2), (2, 7), (3, 36)])
def test_enumeration_counts(n, count):
    found = list(enumerate_states(n))
    assert len(found) == count
    assert len({dump_model(s) for s in found}) == count
    assert found[0].abnormal_flag


def test_random_propositions_are_distinct_subsets():
    ids = ["w0", "w1", "w2", "w3"]
    pool = random_propositions(random.Random(7), ids, 32)
    assert len(pool) == len(set(pool))
    assert all(p <= set(ids) for p in pool)
    assert pool == random_propositions(random.Random(7), ids, 32)


def test_formula_pool_is_inequivalent():
    atoms = ("p0", "p1", "p2")
    pool = formula_pool(atoms, 20, seed=5)
    assert len(pool) == 20
    assert len({truth_set(f, atoms) for f in pool}) == 20
    assert pool == formula_pool(atoms, 20, seed=5)


def test_formula_pool_is_capped_by_the_classes():
    assert len(formula_pool(("p0",), 20)) == 4
