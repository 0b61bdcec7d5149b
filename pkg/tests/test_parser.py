"""Formula grammar: precedence, associativity, constants and syntax errors."""

import pytest
from hypothesis import given

from errors import FormulaSyntaxError
from logic.parser import CONNECTIVE_TOKENS, END_OF_INPUT, OPERAND_TOKENS, parse_formula
from logic.syntax import FALSE, TRUE, And, Atom, Iff, Implies, Not, Or, format_formula
from tests.property_settings import STANDARD_SETTINGS
from tests.strategies import formulas

O, S, J = Atom("O"), Atom("S"), Atom("J")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("O", O),
        ("~O", Not(O)),
        ("~~O", Not(Not(O))),
        ("~O & S", And(Not(O), S)),
        ("O & S & J", And(And(O, S), J)),
        ("O | S | J", Or(Or(O, S), J)),
        ("O & S | J", Or(And(O, S), J)),
        ("O | S & J", Or(O, And(S, J))),
        ("O -> S -> J", Implies(O, Implies(S, J))),
        ("O <-> S <-> J", Iff(O, Iff(S, J))),
        ("O | S -> J", Implies(Or(O, S), J)),
        ("O -> S <-> J", Iff(Implies(O, S), J)),
        ("~(O & S)", Not(And(O, S))),
        ("(O -> S) -> J", Implies(Implies(O, S), J)),
        ("T", TRUE),
        ("F & O", And(FALSE, O)),
        ("Tx", Atom("Tx")),
        ("  O  &  S ", And(O, S)),
    ],
)
def test_precedence_and_grouping(text, expected):
    assert parse_formula(text) == expected


def test_kennedy_formula():
    assert parse_formula("~O & ~S") == And(Not(O), Not(S))


@pytest.mark.parametrize("text", ["", "   "])
def test_empty_input_expects_an_operand(text):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula(text)
    assert info.value.position == 0
    assert info.value.expected == OPERAND_TOKENS


def test_dangling_connective_expects_an_operand():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("O &")
    assert "identifier" in info.value.expected
    assert "~" in info.value.expected


def test_unclosed_group_expects_closing_paren():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("(O & S")
    assert ")" in info.value.expected
    assert END_OF_INPUT not in info.value.expected


def test_juxtaposed_atoms_expect_a_connective():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("O S")
    assert set(CONNECTIVE_TOKENS) <= set(info.value.expected)


@pytest.mark.parametrize("text", ["O && S", "O -> ", "(O", "O)", "~", "O ! S"])
def test_malformed_text_is_rejected(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text)


def test_error_message_points_at_position():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("O &")
    assert "position" in str(info.value)
    assert "^" in str(info.value)


def test_format_is_fully_parenthesized():
    assert format_formula(parse_formula("~O & S -> J")) == "((~O & S) -> J)"
    assert format_formula(TRUE) == "T"
    assert format_formula(Not(FALSE)) == "~F"


@STANDARD_SETTINGS
@given(formulas(("p0", "p1", "p2")))
def test_formatted_text_parses_back(f):
    assert parse_formula(format_formula(f)) == f
