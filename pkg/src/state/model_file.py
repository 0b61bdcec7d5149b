"""
Supposer — Model Files
Line-oriented text format for epistemic states:

    atoms: O S J
    world w0: O=1 S=0 J=1
    rank 0: w0=1
    # comment lines start with '#'

Weights are exact rationals 'p/q' or integers. Ranks appear in order from 0
without gaps; a file without rank lines is the abnormal state.
"""

from __future__ import annotations

import logging
import re
from fractions import Fraction
from pathlib import Path

from errors import ModelFileError
from state.model import build_state
from state.schemas import EpistemicState, RankMeasure, World

logger = logging.getLogger(__name__)

_NAME = r"[A-Za-z][A-Za-z0-9_]*"
_ATOMS_LINE = re.compile(r"atoms\s*:\s*(.*)")
_WORLD_LINE = re.compile(rf"world\s+([A-Za-z0-9_]+)\s*:\s*(.*)")
_RANK_LINE = re.compile(r"rank\s+(\d+)\s*:\s*(.*)")
_ASSIGNMENT = re.compile(rf"({_NAME})=([01])")
_WEIGHT = re.compile(r"([A-Za-z0-9_]+)=(\d+(?:/\d+)?)")


def _assignments(body: str, pattern: re.Pattern, line_no: int) -> list[tuple[str, str]]:
    pairs = []
    for token in body.split():
        match = pattern.fullmatch(token)
        if match is None:
            raise ModelFileError(line_no, f"malformed entry '{token}'")
        pairs.append((match.group(1), match.group(2)))
    return pairs


def load_model(text: str) -> EpistemicState:
    """
    Parse model-file text into a validated state.

    Raises:
        ModelFileError: on malformed lines, with the 1-based line number.
        ModelValidationError: when the described state breaks an invariant.
    """
    atoms: tuple[str, ...] | None = None
    worlds: list[World] = []
    ranks: list[RankMeasure] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        if match := _ATOMS_LINE.fullmatch(line):
            if atoms is not None:
                raise ModelFileError(line_no, "atoms declared twice")
            atoms = tuple(match.group(1).split())
            bad = [a for a in atoms if not re.fullmatch(_NAME, a) or a in ("T", "F")]
            if bad or len(set(atoms)) != len(atoms):
                raise ModelFileError(line_no, f"invalid or repeated atom names: {' '.join(atoms)}")

        elif match := _WORLD_LINE.fullmatch(line):
            if atoms is None:
                raise ModelFileError(line_no, "world declared before the atoms line")
            if ranks:
                raise ModelFileError(line_no, "worlds must be declared before ranks")
            pairs = _assignments(match.group(2), _ASSIGNMENT, line_no)
            valuation = {atom: value == "1" for atom, value in pairs}
            if len(valuation) != len(pairs):
                raise ModelFileError(line_no, "atom assigned twice")
            worlds.append(World(id=match.group(1), valuation=valuation))

        elif match := _RANK_LINE.fullmatch(line):
            index = int(match.group(1))
            if index != len(ranks):
                raise ModelFileError(line_no, f"expected rank {len(ranks)}, found rank {index}")
            weights: dict[str, Fraction] = {}
            for world_id, weight in _assignments(match.group(2), _WEIGHT, line_no):
                if world_id in weights:
                    raise ModelFileError(line_no, f"world '{world_id}' weighted twice")
                try:
                    weights[world_id] = Fraction(weight)
                except ZeroDivisionError:
                    raise ModelFileError(line_no, f"zero denominator in '{weight}'") from None
            ranks.append(RankMeasure(rank_index=index, weights=weights))

        else:
            raise ModelFileError(line_no, f"unrecognized line '{line}'")

    if atoms is None:
        raise ModelFileError(0, "missing atoms line")
    state = build_state(worlds, ranks, atoms=atoms)
    logger.debug("[MODEL] loaded %d worlds, %d ranks", len(worlds), len(ranks))
    return state


def dump_model(state: EpistemicState) -> str:
    """Serialize a state; load_model(dump_model(s)) == s."""
    lines = [f"atoms: {' '.join(state.atoms)}"]
    for w in state.universe:
        values = " ".join(f"{a}={int(w.valuation[a])}" for a in state.atoms)
        lines.append(f"world {w.id}: {values}".rstrip())
    for rank in state.ranks:
        weights = " ".join(f"{w}={weight}" for w, weight in rank.weights.items())
        lines.append(f"rank {rank.rank_index}: {weights}")
    ranked = {w for rank in state.ranks for w in rank.weights}
    for w in state.universe:
        if w.id not in ranked:
            lines.append(f"# {w.id} listed in no rank: non-entertainable")
    return "\n".join(lines) + "\n"


def read_model(path: str | Path) -> EpistemicState:
    return load_model(Path(path).read_text(encoding="utf-8"))


def write_model(path: str | Path, state: EpistemicState) -> None:
    Path(path).write_text(dump_model(state), encoding="utf-8")
