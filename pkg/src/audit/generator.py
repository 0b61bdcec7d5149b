"""
Supposer — Model Generation
Seeded random states, random proposition and formula pools, and exhaustive
enumeration of every rank structure over a small universe.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterator, Sequence
from fractions import Fraction
from itertools import combinations, product

from logic.semantics import dedupe_equivalent, valuation_universe
from logic.syntax import FALSE, TRUE, And, Atom, Formula, Iff, Implies, Not, Or
from state.model import abnormal_state, build_state
from state.schemas import EpistemicState, GeneratorParams, Proposition, RankMeasure, World

logger = logging.getLogger(__name__)

# Within-rank weight patterns for enumeration, by rank size. Denominators stay <= 4
# except for uniform ranks of five or more worlds.
_WEIGHT_GRID: dict[int, tuple[tuple[Fraction, ...], ...]] = {
    1: ((Fraction(1),),),
    2: ((Fraction(1, 2), Fraction(1, 2)), (Fraction(3, 4), Fraction(1, 4))),
    3: ((Fraction(1, 3),) * 3, (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4))),
    4: ((Fraction(1, 4),) * 4,),
}


def atom_names(n: int) -> tuple[str, ...]:
    return tuple(f"p{i}" for i in range(n))


# ──────────────────────────────────────────────
# Random States
# ──────────────────────────────────────────────

def _random_ranks(rng: random.Random, ranked: list[str], max_ranks: int, bound: int) -> list[RankMeasure]:
    n_ranks = rng.randint(1, min(max_ranks, len(ranked)))
    cuts = sorted(rng.sample(range(1, len(ranked)), n_ranks - 1))
    blocks = [ranked[i:j] for i, j in zip([0, *cuts], [*cuts, len(ranked)])]

    ranks = []
    for index, block in enumerate(blocks):
        raw = {w: rng.randint(1, bound) for w in sorted(block)}
        total = sum(raw.values())
        ranks.append(RankMeasure(rank_index=index, weights={w: Fraction(v, total) for w, v in raw.items()}))
    return ranks


def random_state(params: GeneratorParams) -> EpistemicState:
    """
    Deterministic in `params`. The universe is every valuation over 1..max_atoms
    atoms; floor(fraction * |U|) worlds are left non-entertainable, but at least
    one world is always ranked, so the result is never abnormal.
    """
    rng = random.Random(params.seed)
    atoms = atom_names(rng.randint(1, params.max_atoms))
    universe = valuation_universe(atoms)

    ids = [w.id for w in universe]
    rng.shuffle(ids)
    excluded = min(int(params.non_entertainable_fraction * len(ids)), len(ids) - 1)
    ranked = ids[excluded:]

    ranks = _random_ranks(rng, ranked, params.max_ranks, params.weight_denominator_bound)
    return build_state(universe, ranks, atoms=atoms)


def random_propositions(rng: random.Random, world_ids: Sequence[str], count: int) -> list[Proposition]:
    """`count` uniformly random subsets of the universe, duplicates dropped, order kept."""
    ordered = sorted(world_ids)
    pool: list[Proposition] = []
    for _ in range(count):
        p = frozenset(w for w in ordered if rng.random() < 0.5)
        if p not in pool:
            pool.append(p)
    return pool


# ──────────────────────────────────────────────
# Exhaustive Enumeration
# ──────────────────────────────────────────────

def small_universe(n: int) -> tuple[tuple[str, ...], tuple[World, ...]]:
    """The first n valuations over just enough atoms to tell them apart."""
    if n < 1:
        raise ValueError(f"universe size must be positive, got {n}")
    atoms = atom_names(max(1, (n - 1).bit_length()))
    return atoms, valuation_universe(atoms)[:n]


def _ordered_partitions(items: tuple[str, ...]) -> Iterator[list[tuple[str, ...]]]:
    if not items:
        yield []
        return
    for size in range(1, len(items) + 1):
        for block in combinations(items, size):
            rest = tuple(w for w in items if w not in block)
            for tail in _ordered_partitions(rest):
                yield [block, *tail]


def _weightings(block: tuple[str, ...]) -> list[dict[str, Fraction]]:
    patterns = _WEIGHT_GRID.get(len(block), ((Fraction(1, len(block)),) * len(block),))
    return [dict(zip(block, pattern)) for pattern in patterns]


def enumerate_states(n_worlds: int) -> Iterator[EpistemicState]:
    """
    Every rank structure over an n-world universe: each subset of entertainable
    worlds (the empty one gives the abnormal state), each ordered partition of
    it into ranks, each combination of weight-grid patterns.
    """
    atoms, universe = small_universe(n_worlds)
    ids = tuple(w.id for w in universe)
    yield abnormal_state(universe, atoms)
    for size in range(1, len(ids) + 1):
        for entertained in combinations(ids, size):
            for blocks in _ordered_partitions(entertained):
                for weightings in product(*(_weightings(b) for b in blocks)):
                    ranks = [RankMeasure(rank_index=i, weights=w) for i, w in enumerate(weightings)]
                    yield build_state(universe, ranks, atoms=atoms)


# ──────────────────────────────────────────────
# Formulas
# ──────────────────────────────────────────────

_BINARY = (And, Or, Implies, Iff)


def random_formula(rng: random.Random, atoms: Sequence[str], depth: int = 3) -> Formula:
    if depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.1:
            return rng.choice((TRUE, FALSE))
        return Atom(rng.choice(list(atoms)))
    if rng.random() < 0.25:
        return Not(random_formula(rng, atoms, depth - 1))
    connective = rng.choice(_BINARY)
    return connective(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1))


def formula_pool(atoms: Sequence[str], size: int, seed: int = 0, depth: int = 3) -> list[Formula]:
    """
    Up to `size` pairwise inequivalent formulas: TRUE and the atoms first, then
    random formulas. Smaller than `size` only when the atoms admit fewer classes.
    """
    rng = random.Random(seed)
    pool = dedupe_equivalent([TRUE, *(Atom(a) for a in atoms)], atoms)[:size]
    classes = 2 ** (2 ** len(atoms))
    attempts = 0
    while len(pool) < min(size, classes) and attempts < 50 * size:
        attempts += 1
        pool = dedupe_equivalent([*pool, random_formula(rng, atoms, depth)], atoms)
    logger.debug("[AUDIT] formula pool: %d formulas over %d atoms", len(pool), len(atoms))
    return pool
