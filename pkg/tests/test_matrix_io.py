"""Tests for matrix ingestion"""

from fractions import Fraction as F

import pytest

from tests.helpers import FOUR_CSV, FOUR_ROWS
from tropical.errors import ParseError, SchemaError
from tropical.scalars import Arithmetic
from utils.matrix_io import parse_matrix_csv, parse_matrix_json

FOUR_JSON = """{"matrix": [["1","1/3","1/2","1/3"],["3","1","4","1"],
                           ["2","1/4","1","2"],["3","1","1/2","1"]]}"""


def test_csv_golden():
    """Test that the four-alternative CSV parses exactly"""
    m = parse_matrix_csv(FOUR_CSV)
    assert m.to_rows() == FOUR_ROWS


def test_csv_single_cell_and_decimals():
    """Test a 1x1 matrix and exact decimals"""
    assert parse_matrix_csv("1\n").shape == (1, 1)
    m = parse_matrix_csv("1, 0.5\n2, 1\n\n")
    assert m[0, 1] == F(1, 2)


def test_csv_float_mode():
    """Test that float mode yields a float64 matrix"""
    m = parse_matrix_csv(FOUR_CSV, Arithmetic.FLOAT)
    assert m.arithmetic == Arithmetic.FLOAT
    assert m[0, 1] == pytest.approx(1 / 3)


def test_csv_ragged_row():
    """Test that a short row is reported with its line"""
    with pytest.raises(ParseError, match="line 2") as info:
        parse_matrix_csv("1,2\n0.5\n")
    assert info.value.line == 2


def test_csv_bad_token_position():
    """Test line and column of an unreadable value"""
    with pytest.raises(ParseError) as info:
        parse_matrix_csv("1,2\nx,1\n")
    assert (info.value.line, info.value.column) == (2, 1)
    assert "line 2, column 1" in str(info.value)


def test_csv_empty_input():
    """Test that empty text is refused"""
    with pytest.raises(ParseError, match="empty"):
        parse_matrix_csv("\n\n")


def test_json_golden():
    """Test fraction strings in JSON"""
    m, labels = parse_matrix_json(FOUR_JSON)
    assert m.to_rows() == FOUR_ROWS
    assert labels is None


def test_json_numbers_are_exact():
    """Test that JSON decimals are read without binary rounding"""
    m, _ = parse_matrix_json('{"matrix": [[1, 0.1], [10, 1]]}')
    assert m[0, 1] == F(1, 10)
    m, _ = parse_matrix_json('{"matrix": [[1]]}')
    assert m.shape == (1, 1)


def test_json_labels():
    """Test label parsing and the length check"""
    _, labels = parse_matrix_json('{"matrix": [[1, 2], ["1/2", 1]], "labels": ["a", "b"]}')
    assert labels == ["a", "b"]
    with pytest.raises(SchemaError) as info:
        parse_matrix_json('{"matrix": [[1, 2], ["1/2", 1]], "labels": ["a", "b", "c"]}')
    assert info.value.path == "$.labels"


@pytest.mark.parametrize("text, path", [
    ('[]', "$"),
    ('{"rows": []}', "$"),
    ('{"matrix": []}', "$.matrix"),
    ('{"matrix": [[1, 2], 3]}', "$.matrix[1]"),
    ('{"matrix": [[1, 2], [1]]}', "$.matrix[1]"),
    ('{"matrix": [[1, true], [1, 1]]}', "$.matrix[0][1]"),
    ('{"matrix": [[1, "abc"], [1, 1]]}', "$.matrix[0][1]"),
    ('{"matrix": [[1, 2], [null, 1]]}', "$.matrix[1][0]"),
    ('{"matrix": [[1]], "labels": [1]}', "$.labels"),
])
def test_json_schema_errors(text, path):
    """Test path-qualified schema errors"""
    with pytest.raises(SchemaError) as info:
        parse_matrix_json(text)
    assert info.value.path == path
    assert str(info.value).startswith(path + ":")


def test_json_syntax_error():
    """Test that malformed JSON is a parse error"""
    with pytest.raises(ParseError):
        parse_matrix_json('{"matrix": [[1,]]}')
