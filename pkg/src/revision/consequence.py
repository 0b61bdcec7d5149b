"""
Supposer — Nonmonotonic Consequence
A |~ B over a two-place measure, computed two ways: directly as P(B|A) = 1,
and through the expectations of the supposed state P^A.
"""

from __future__ import annotations

from logic.semantics import extension
from logic.syntax import Formula
from revision.cores import innermost
from revision.supposition import suppose
from state.model import popper_eval
from state.schemas import EpistemicState


def nm_follows(state: EpistemicState, a: Formula, b: Formula) -> bool:
    """B follows nonmonotonically from A iff P(B|A) = 1. Abnormal antecedents entail everything."""
    ext_a = extension(a, state.universe, state.atoms)
    ext_b = extension(b, state.universe, state.atoms)
    return popper_eval(state, ext_b, ext_a) == 1


def nm_follows_via_cores(state: EpistemicState, a: Formula, b: Formula) -> bool:
    """B follows nonmonotonically from A iff the innermost core of P^A entails B (vacuously when P^A is abnormal)."""
    ext_a = extension(a, state.universe, state.atoms)
    ext_b = extension(b, state.universe, state.atoms)
    return innermost(suppose(state, ext_a)) <= ext_b
