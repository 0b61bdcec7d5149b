"""Shared fixtures: the bundled states and a formula-to-extension helper."""

from __future__ import annotations

import pytest

from logic.parser import parse_formula
from logic.semantics import extension
from state.fixtures import coin_state, kennedy_state
from state.model import abnormal_state
from state.schemas import EpistemicState, Proposition


@pytest.fixture
def kennedy() -> EpistemicState:
    return kennedy_state()


@pytest.fixture
def coin() -> EpistemicState:
    return coin_state()


@pytest.fixture
def abnormal(kennedy) -> EpistemicState:
    return abnormal_state(kennedy.universe, kennedy.atoms)


@pytest.fixture
def ext():
    """ext(state, "~O & S") -> the worlds of the state where the formula holds."""
    def _ext(state: EpistemicState, text: str) -> Proposition:
        return extension(parse_formula(text), state.universe, state.atoms)
    return _ext
