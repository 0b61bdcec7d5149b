"""
Supposer — Supposition
The hypothetical-revision operator P -> P^A = P(. | . n A), supposition
sequences, conditional acceptance and entertainability.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from typing import Optional

from errors import UnknownWorldError
from logic.semantics import check_atoms, extension
from logic.syntax import Formula
from revision.cores import innermost, outermost
from state.model import abnormal_state
from state.schemas import (
    EpistemicState,
    Proposition,
    RankMeasure,
    SuppositionStep,
    SuppositionTrace,
    Verdict,
)

logger = logging.getLogger(__name__)


def entertainable(state: EpistemicState, a: Iterable[str]) -> bool:
    """A overlaps the outermost core."""
    return bool(frozenset(a) & outermost(state))


def is_universal(state: EpistemicState) -> bool:
    return outermost(state) == state.world_ids


def is_consistent(state: EpistemicState) -> bool:
    return bool(innermost(state))


def suppose(state: EpistemicState, a: Iterable[str]) -> EpistemicState:
    """
    Condition every rank that meets A on A and drop the others; ranks are
    renumbered from 0 and the universe is kept. Supposing from the abnormal
    state, or supposing A disjoint from the outermost core, yields the
    abnormal state.
    """
    a = frozenset(a)
    stray = a - state.world_ids
    if stray:
        raise UnknownWorldError(stray)
    if not entertainable(state, a):
        logger.debug("[SUPPOSE] %s is not entertainable: incoherent result", sorted(a))
        return abnormal_state(state.universe, state.atoms)

    ranks = []
    for rank in state.ranks:
        kept = {w: weight for w, weight in rank.weights.items() if w in a}
        if not kept:
            continue
        total = sum(kept.values())
        ranks.append(RankMeasure(rank_index=len(ranks), weights={w: v / total for w, v in kept.items()}))
    return EpistemicState(atoms=state.atoms, universe=state.universe, ranks=tuple(ranks))


def suppose_seq(
    state: EpistemicState,
    inputs: Sequence[Iterable[str]],
    formulas: Optional[Sequence[Optional[Formula]]] = None,
) -> SuppositionTrace:
    """Fold suppose over the inputs, recording every intermediate state."""
    steps = []
    current = state
    for i, supposed in enumerate(inputs):
        supposed = frozenset(supposed)
        current = suppose(current, supposed)
        source = formulas[i] if formulas is not None else None
        steps.append(SuppositionStep(supposed=supposed, source_formula=source, result=current))
    return SuppositionTrace(initial=state, steps=tuple(steps))


def _verdict(supposed: EpistemicState, consequent: Formula) -> Verdict:
    core = innermost(supposed)
    return Verdict(
        accepted=core <= extension(consequent, supposed.universe, supposed.atoms),
        coherent=not supposed.abnormal_flag,
    )


def accepts_conditional(state: EpistemicState, antecedent: Formula, consequent: Formula) -> Verdict:
    """
    Ramsey-style acceptance of 'if A then C'. A non-entertainable antecedent
    leads to the abnormal state, whose empty innermost core accepts every
    consequent vacuously; the verdict then reports coherent=False.
    """
    a = extension(antecedent, state.universe, state.atoms)
    check_atoms(consequent, state.atoms)
    return _verdict(suppose(state, a), consequent)


def accepts_iterated(state: EpistemicState, antecedents: Sequence[Formula], consequent: Formula) -> Verdict:
    """'If A1, then if A2, then ... C', evaluated along the supposition sequence A1, A2, ..."""
    inputs: list[Proposition] = [extension(f, state.universe, state.atoms) for f in antecedents]
    check_atoms(consequent, state.atoms)
    trace = suppose_seq(state, inputs, list(antecedents))
    return _verdict(trace.final, consequent)
