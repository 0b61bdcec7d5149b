"""
Supposer — Formula Syntax
Abstract syntax tree for propositional formulas over named atoms,
classical evaluation, and the canonical pretty-printer.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from errors import UnknownAtomError


class Formula:
    """Base of all formula nodes. Nodes are immutable and compare structurally."""
    __slots__ = ()

    def evaluate(self, valuation: Mapping[str, bool]) -> bool:
        raise NotImplementedError

    def atoms(self) -> frozenset[str]:
        raise NotImplementedError


@dataclass(frozen=True, slots=True)
class Const(Formula):
    value: bool

    def evaluate(self, valuation: Mapping[str, bool]) -> bool:
        return self.value

    def atoms(self) -> frozenset[str]:
        return frozenset()


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    def evaluate(self, valuation: Mapping[str, bool]) -> bool:
        try:
            return valuation[self.name]
        except KeyError:
            raise UnknownAtomError(self.name) from None

    def atoms(self) -> frozenset[str]:
        return frozenset((self.name,))


@dataclass(frozen=True, slots=True)
class Not(Formula):
    operand: Formula

    def evaluate(self, valuation: Mapping[str, bool]) -> bool:
        return not self.operand.evaluate(valuation)

    def atoms(self) -> frozenset[str]:
        return self.operand.atoms()


@dataclass(frozen=True, slots=True)
class Binary(Formula):
    left: Formula
    right: Formula

    symbol = ""

    def atoms(self) -> frozenset[str]:
        return self.left.atoms() | self.right.atoms()


@dataclass(frozen=True, slots=True)
class And(Binary):
    symbol = "&"

    def evaluate(self, valuation: Mapping[str, bool]) -> bool:
        return self.left.evaluate(valuation) and self.right.evaluate(valuation)


@dataclass(frozen=True, slots=True)
class Or(Binary):
    symbol = "|"

    def evaluate(self, valuation: Mapping[str, bool]) -> bool:
        return self.left.evaluate(valuation) or self.right.evaluate(valuation)


@dataclass(frozen=True, slots=True)
class Implies(Binary):
    symbol = "->"

    def evaluate(self, valuation: Mapping[str, bool]) -> bool:
        return (not self.left.evaluate(valuation)) or self.right.evaluate(valuation)


@dataclass(frozen=True, slots=True)
class Iff(Binary):
    symbol = "<->"

    def evaluate(self, valuation: Mapping[str, bool]) -> bool:
        return self.left.evaluate(valuation) == self.right.evaluate(valuation)


TRUE = Const(True)
FALSE = Const(False)


def format_formula(f: Formula) -> str:
    """Fully parenthesized canonical text; parse_formula reads it back to an equal AST."""
    if isinstance(f, Const):
        return "T" if f.value else "F"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        return "~" + format_formula(f.operand)
    if isinstance(f, Binary):
        return f"({format_formula(f.left)} {f.symbol} {format_formula(f.right)})"
    raise TypeError(f"not a formula: {f!r}")
