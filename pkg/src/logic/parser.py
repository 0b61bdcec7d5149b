"""
Supposer — Formula Parser
pyparsing grammar for the ASCII formula language.

Precedence, tightest first: ~  &  |  ->  <->.  '&' and '|' group to the left,
'->' and '<->' to the right. T and F are the constants.
"""

from __future__ import annotations

from collections.abc import Callable
from functools import lru_cache, reduce

import pyparsing as pp

from errors import FormulaSyntaxError
from logic.syntax import FALSE, TRUE, And, Atom, Formula, Iff, Implies, Not, Or

pp.ParserElement.enable_packrat()

OPERAND_TOKENS = ("identifier", "T", "F", "~", "(")
CONNECTIVE_TOKENS = ("&", "|", "->", "<->")
END_OF_INPUT = "end of input"


def _left(node_type: type) -> Callable[[pp.ParseResults], Formula]:
    def fold(tokens: pp.ParseResults) -> Formula:
        return reduce(node_type, tokens)
    return fold


def _right(node_type: type) -> Callable[[pp.ParseResults], Formula]:
    def fold(tokens: pp.ParseResults) -> Formula:
        return node_type(tokens[0], tokens[1]) if len(tokens) == 2 else tokens[0]
    return fold


@lru_cache(maxsize=1)
def _grammar() -> pp.ParserElement:
    formula = pp.Forward().set_name("formula")
    operand = pp.Forward().set_name("operand")

    true_ = pp.Keyword("T").set_parse_action(lambda: TRUE)
    false_ = pp.Keyword("F").set_parse_action(lambda: FALSE)
    identifier = pp.Regex(r"[A-Za-z][A-Za-z0-9_]*").set_parse_action(lambda t: Atom(t[0]))
    group = pp.Suppress("(") - formula - pp.Suppress(")")

    # '-' turns a failure after a consumed connective into a hard error at that spot.
    negation = (pp.Suppress("~") - operand).set_parse_action(lambda t: Not(t[0]))
    operand <<= negation | true_ | false_ | identifier | group

    conjunction = (operand + pp.ZeroOrMore(pp.Suppress("&") - operand)).set_parse_action(_left(And))
    disjunction = (conjunction + pp.ZeroOrMore(pp.Suppress("|") - conjunction)).set_parse_action(_left(Or))

    implication = pp.Forward()
    implication <<= (disjunction + pp.Optional(pp.Suppress("->") - implication)).set_parse_action(_right(Implies))

    biconditional = pp.Forward()
    biconditional <<= (implication + pp.Optional(pp.Suppress("<->") - biconditional)).set_parse_action(_right(Iff))

    formula <<= biconditional
    return formula


def _expected_at(text: str, position: int) -> tuple[str, ...]:
    """What the grammar accepts at `position`, read off the consumed prefix."""
    prefix = text[:position].rstrip()
    if not prefix or prefix.endswith(("~", "&", "|", "->", "(")):
        return OPERAND_TOKENS
    depth = prefix.count("(") - prefix.count(")")
    return CONNECTIVE_TOKENS + ((")",) if depth > 0 else (END_OF_INPUT,))


def parse_formula(text: str) -> Formula:
    """
    Parse formula text into an AST.

    Raises:
        FormulaSyntaxError: with the failing position and the expected-token set.
    """
    if not text.strip():
        raise FormulaSyntaxError(text, 0, OPERAND_TOKENS)
    try:
        return _grammar().parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        position = min(exc.loc, len(text))
        raise FormulaSyntaxError(text, position, _expected_at(text, position)) from None
