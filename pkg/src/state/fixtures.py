"""
Supposer — Bundled Fixtures
A plausibility ranking over who killed Kennedy, and the
truncated coin-flipping space with its two cores.
"""

from __future__ import annotations

from fractions import Fraction

from config.settings import COIN_DEPTH
from state.model import build_state, from_ranking
from state.schemas import EpistemicState, RankMeasure, World

KENNEDY_ATOMS = ("O", "S", "J")

# O: Oswald alone shot Kennedy, S: someone else did it, J: Johnson became president.
KENNEDY_KAPPA = {"w0": 0, "w1": 1, "w2": 2, "w3": 3}
KENNEDY_CUTOFF = 2                    # rank 3 is not entertainable

OMEGA = "omega"


def kennedy_state() -> EpistemicState:
    """Ranks 0-2 are singletons w0, w1, w2; w3 (nobody killed Kennedy) is non-entertainable."""
    rows = {
        "w0": (True, False, True),
        "w1": (False, True, True),
        "w2": (True, True, True),
        "w3": (False, False, False),
    }
    universe = [World(id=wid, valuation=dict(zip(KENNEDY_ATOMS, values))) for wid, values in rows.items()]
    return from_ranking(universe, KENNEDY_KAPPA, cutoff=KENNEDY_CUTOFF, atoms=KENNEDY_ATOMS)


def coin_state(n: int = COIN_DEPTH) -> EpistemicState:
    """
    Flip a fair coin until the first head; X counts the tails. Outcomes
    x0..xN carry 2^-(k+1) renormalized over the truncation (denominator
    2^(N+1) - 1) in rank 0; 'omega' (tails forever) is alone in rank 1.
    Atoms: `omega` marks the never-stopping outcome, `even` an even count.
    """
    if n < 0:
        raise ValueError(f"truncation depth must be non-negative, got {n}")
    atoms = (OMEGA, "even")
    universe = [World(id=f"x{k}", valuation={OMEGA: False, "even": k % 2 == 0}) for k in range(n + 1)]
    universe.append(World(id=OMEGA, valuation={OMEGA: True, "even": False}))

    denominator = 2 ** (n + 1) - 1
    finite = RankMeasure(
        rank_index=0,
        weights={f"x{k}": Fraction(2 ** (n - k), denominator) for k in range(n + 1)},
    )
    never = RankMeasure(rank_index=1, weights={OMEGA: 1})
    return build_state(universe, [finite, never], atoms=atoms)
