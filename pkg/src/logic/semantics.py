"""
Supposer — Formula Semantics
World evaluation, extensions over a universe, and the brute-force
truth-table oracle used to compare and deduplicate formulas.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import reduce
from itertools import product

from errors import UnknownAtomError
from logic.syntax import FALSE, TRUE, And, Atom, Formula, Not, Or
from state.schemas import Proposition, World

Valuation = tuple[bool, ...]


def atoms_of(f: Formula) -> frozenset[str]:
    return f.atoms()


def check_atoms(f: Formula, declared: Iterable[str]) -> None:
    """Raise UnknownAtomError for the first atom of `f` (alphabetically) that is not declared."""
    missing = f.atoms() - frozenset(declared)
    if missing:
        raise UnknownAtomError(min(missing))


def eval_world(f: Formula, w: World) -> bool:
    return f.evaluate(w.valuation)


def extension(f: Formula, universe: Iterable[World], atoms: Iterable[str] | None = None) -> Proposition:
    """The worlds of `universe` where `f` holds. With `atoms`, undeclared atoms are rejected up front."""
    if atoms is not None:
        check_atoms(f, atoms)
    return frozenset(w.id for w in universe if f.evaluate(w.valuation))


# ──────────────────────────────────────────────
# Valuation Spaces
# ──────────────────────────────────────────────

def all_valuations(atoms: Sequence[str]) -> list[Valuation]:
    return list(product((False, True), repeat=len(atoms)))


def valuation_universe(atoms: Sequence[str]) -> tuple[World, ...]:
    """One world per valuation, w0 = all false; the last atom varies fastest."""
    return tuple(
        World(id=f"w{i}", valuation=dict(zip(atoms, values)))
        for i, values in enumerate(all_valuations(atoms))
    )


# ──────────────────────────────────────────────
# Truth-Table Oracle
# ──────────────────────────────────────────────

def truth_set(f: Formula, atoms: Sequence[str]) -> frozenset[Valuation]:
    check_atoms(f, atoms)
    return frozenset(v for v in all_valuations(atoms) if f.evaluate(dict(zip(atoms, v))))


def equivalent(f: Formula, g: Formula, atoms: Sequence[str]) -> bool:
    return truth_set(f, atoms) == truth_set(g, atoms)


def dedupe_equivalent(formulas: Iterable[Formula], atoms: Sequence[str]) -> list[Formula]:
    """Keep the first formula of each logical-equivalence class, in input order."""
    seen: set[frozenset[Valuation]] = set()
    kept = []
    for f in formulas:
        key = truth_set(f, atoms)
        if key not in seen:
            seen.add(key)
            kept.append(f)
    return kept


def formula_for_valuations(valuations: Iterable[Valuation], atoms: Sequence[str]) -> Formula:
    """Canonical DNF whose truth set is exactly `valuations`; F when empty."""
    minterms = []
    for values in sorted(valuations):
        literals = [Atom(a) if value else Not(Atom(a)) for a, value in zip(atoms, values)]
        minterms.append(reduce(And, literals) if literals else TRUE)
    return reduce(Or, minterms) if minterms else FALSE


def all_formulas_up_to_equivalence(atoms: Sequence[str]) -> list[Formula]:
    """One representative per equivalence class: 2^(2^n) formulas for n atoms."""
    space = all_valuations(atoms)
    return [
        formula_for_valuations([v for v, keep in zip(space, mask) if keep], atoms)
        for mask in product((False, True), repeat=len(space))
    ]
