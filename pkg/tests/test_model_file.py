"""Model file format: parsing, validation errors with line numbers, and dumping."""

from fractions import Fraction

import pytest
from hypothesis import given

from errors import ModelFileError, UnknownWorldError, WeightSumError
from state.model_file import dump_model, load_model, read_model, write_model
from tests.property_settings import STANDARD_SETTINGS
from tests.strategies import states

KENNEDY_TEXT = """\
# who killed Kennedy
atoms: O S J
world w0: O=1 S=0 J=1
world w1: O=0 S=1 J=1
world w2: O=1 S=1 J=1
world w3: O=0 S=0 J=0
rank 0: w0=1
rank 1: w1=1
rank 2: w2=1
"""


def test_loads_kennedy(kennedy):
    assert load_model(KENNEDY_TEXT) == kennedy


def test_dump_then_load(kennedy, coin):
    assert load_model(dump_model(kennedy)) == kennedy
    assert load_model(dump_model(coin)) == coin


def test_dump_marks_non_entertainable_worlds(kennedy):
    assert "# w3 listed in no rank: non-entertainable" in dump_model(kennedy)


def test_file_without_ranks_is_abnormal():
    state = load_model("atoms: p\nworld a: p=1\n")
    assert state.abnormal_flag


def test_rational_weights():
    state = load_model("atoms: p\nworld a: p=1\nworld b: p=0\nrank 0: a=2/3 b=1/3\n")
    assert state.ranks[0].weights == {"a": Fraction(2, 3), "b": Fraction(1, 3)}


@pytest.mark.parametrize(
    "text, line_no",
    [
        ("atoms: p\nworld a: p=1\nrank 1: a=1\n", 3),
        ("world a: p=1\n", 1),
        ("atoms: p\nworld a: p=2\n", 2),
        ("atoms: p\natoms: q\n", 2),
        ("atoms: p\nworld a: p=1\nrank 0: a=1\nworld b: p=0\n", 4),
        ("atoms: p\nworld a: p=1\nrank 0: a=1/0\n", 3),
        ("atoms: p\nworld a: p=1\nrank 0: a=1 a=1\n", 3),
        ("atoms: p\n\nbogus line\n", 3),
        ("atoms: T\n", 1),
    ],
)
def test_malformed_lines_carry_line_numbers(text, line_no):
    with pytest.raises(ModelFileError) as info:
        load_model(text)
    assert info.value.line_no == line_no


def test_missing_atoms_line():
    with pytest.raises(ModelFileError):
        load_model("# nothing here\n")


def test_invariant_violations_surface():
    with pytest.raises(WeightSumError):
        load_model("atoms: p\nworld a: p=1\nworld b: p=0\nrank 0: a=1/2 b=1/3\n")
    with pytest.raises(UnknownWorldError):
        load_model("atoms: p\nworld a: p=1\nrank 0: z=1\n")


def test_read_and_write(tmp_path, kennedy):
    path = tmp_path / "kennedy.model"
    write_model(path, kennedy)
    assert read_model(path) == kennedy


@STANDARD_SETTINGS
@given(states())
def test_dump_load_identity(state):
    assert load_model(dump_model(state)) == state
