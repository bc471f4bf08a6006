import json
from fractions import Fraction

import pytest
from hypothesis import given

from kneading import FAREY
from kneading.errors import BadEndpoints, NotUnimodular, ParseError, PartitionError
from kneading.exact import QuadSurd
from kneading.syntax import format_value, load_partition, parse_digits, parse_number

from strategies import surds, unit_rationals


@pytest.mark.parametrize("text,expected", [
    ("3/7", Fraction(3, 7)),
    ("  -12 ", Fraction(-12)),
    ("4/6", Fraction(2, 3)),
    ("(-1+1*sqrt(2))/1", QuadSurd(-1, 1, 1, 2)),
    ("( -1 + 1 * sqrt ( 2 ) ) / 1", QuadSurd(-1, 1, 1, 2)),
    ("(-1+sqrt(5))/2", QuadSurd(-1, 1, 2, 5)),
    ("(1-sqrt(5))/2", QuadSurd(1, -1, 2, 5)),
    ("(sqrt(2))/2", QuadSurd(0, 1, 2, 2)),
    ("(-3*sqrt(2))", QuadSurd(0, -3, 1, 2)),
    ("(+2+2*sqrt(8))/4", QuadSurd(1, 2, 2, 2)),
    ("(3+0*sqrt(5))/6", Fraction(1, 2)),
    ("(1+sqrt(9))", Fraction(4)),
])
def test_parse(text, expected):
    assert parse_number(text) == expected


@pytest.mark.parametrize("text,column", [
    ("3/0", 3),
    ("3/7x", 4),
    ("", 1),
    ("(1+sqrt(2)", 11),
    ("(1 sqrt(2))", 4),
    ("(1+2sqrt(2))", 5),
    ("(1+sqrt(-2))", 9),
    ("1.5", 2),
    ("(1+sqrt(2))/-3", 13),
])
def test_parse_errors_carry_column(text, column):
    with pytest.raises(ParseError) as err:
        parse_number(text)
    assert err.value.column == column


@given(surds())
def test_surd_round_trip(x):
    assert parse_number(format_value(x)) == x


@given(unit_rationals())
def test_rational_round_trip(x):
    assert parse_number(format_value(x)) == x


def test_format():
    assert format_value(QuadSurd(-1, 1, 1, 2)) == "(-1+1*sqrt(2))/1"
    assert format_value(QuadSurd(0, 1, 2, 2)) == "(0+1*sqrt(2))/2"
    assert format_value(Fraction(3, 7)) == "3/7"


def test_digits():
    assert parse_digits("") == []
    assert parse_digits("1, 2 2,1") == [1, 2, 2, 1]
    with pytest.raises(ParseError):
        parse_digits("1,x")


class TestPartitionFile:
    def write(self, tmp_path, data):
        path = tmp_path / "p.json"
        path.write_text(json.dumps(data) if not isinstance(data, str) else data)
        return path

    def test_farey(self, tmp_path):
        P = load_partition(self.write(tmp_path, {"Q": ["0", "1/2", "1"], "epsilon": [-1, -1]}))
        assert P == FAREY

    def test_integer_entries(self, tmp_path):
        P = load_partition(self.write(tmp_path, {"Q": [0, "1/2", 1], "epsilon": [1, -1]}))
        assert P.signs == [1, -1]

    def test_errors_name_index(self, tmp_path):
        with pytest.raises(NotUnimodular) as err:
            load_partition(self.write(tmp_path, {"Q": ["0", "1/3", "1"], "epsilon": [-1, -1]}))
        assert err.value.index == 1
        with pytest.raises(BadEndpoints):
            load_partition(self.write(tmp_path, {"Q": ["0", "1/2"], "epsilon": [-1]}))
        with pytest.raises(PartitionError) as err:
            load_partition(self.write(tmp_path, {"Q": ["0", "1/x", "1"], "epsilon": [-1, -1]}))
        assert err.value.index == 1

    def test_malformed(self, tmp_path):
        with pytest.raises(ParseError):
            load_partition(self.write(tmp_path, "{not json"))
        with pytest.raises(PartitionError):
            load_partition(self.write(tmp_path, {"Q": ["0", "1"]}))
