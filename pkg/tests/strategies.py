"""Hypothesis strategies for states, propositions and formulas."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from audit.generator import small_universe
from logic.syntax import FALSE, TRUE, And, Atom, Formula, Iff, Implies, Not, Or
from state.model import abnormal_state, build_state
from state.schemas import EpistemicState, Proposition, RankMeasure


@st.composite
def states(draw, max_worlds: int = 5, universal: bool = False, allow_abnormal: bool = True) -> EpistemicState:
    """Any valid state over 1..max_worlds worlds, with random rank structure and weights."""
    n = draw(st.integers(1, max_worlds))
    atoms, universe = small_universe(n)
    order = draw(st.permutations([w.id for w in universe]))

    if universal:
        ranked = order
    else:
        ranked = order[: draw(st.integers(0 if allow_abnormal else 1, n))]
    if not ranked:
        return abnormal_state(universe, atoms)

    n_ranks = draw(st.integers(1, len(ranked)))
    cuts = sorted(draw(st.sets(st.integers(1, len(ranked) - 1), min_size=n_ranks - 1, max_size=n_ranks - 1))) \
        if n_ranks > 1 else []
    blocks = [ranked[i:j] for i, j in zip([0, *cuts], [*cuts, len(ranked)])]

    ranks = []
    for index, block in enumerate(blocks):
        raw = {w: draw(st.integers(1, 9)) for w in block}
        total = sum(raw.values())
        ranks.append(RankMeasure(rank_index=index, weights={w: Fraction(v, total) for w, v in raw.items()}))
    return build_state(universe, ranks, atoms=atoms)


def propositions(state: EpistemicState) -> st.SearchStrategy[Proposition]:
    return st.frozensets(st.sampled_from(sorted(state.world_ids)))


def formulas(atoms: tuple[str, ...], max_leaves: int = 8) -> st.SearchStrategy[Formula]:
    leaves = st.sampled_from([TRUE, FALSE, *(Atom(a) for a in atoms)])
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            st.builds(Not, inner),
            st.builds(And, inner, inner),
            st.builds(Or, inner, inner),
            st.builds(Implies, inner, inner),
            st.builds(Iff, inner, inner),
        ),
        max_leaves=max_leaves,
    )
