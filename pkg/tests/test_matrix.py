"""Parsing and validation of transition matrices."""

import json

import pytest

from treeshift.matrix import (
    BadChar,
    NonSquare,
    ParseError,
    RowOrColumnZero,
    TransitionMatrix,
    parse_matrix,
)
from treeshift.reference import REFERENCE_ROWS


def test_row_string_basic():
    m = parse_matrix("11,10")
    assert m.d == 2
    assert m.rows == ((1, 1), (1, 0))
    assert m.symbols == ("1", "2")


def test_row_string_whitespace_tolerated():
    m = parse_matrix("  11 , 10 ")
    assert m.rows == ((1, 1), (1, 0))


def test_json_format():
    m = parse_matrix(json.dumps([[0, 1, 0], [0, 0, 1], [1, 1, 0]]))
    assert m.d == 3
    assert m.rows == ((0, 1, 0), (0, 0, 1), (1, 1, 0))


def test_json_rejects_bool_entries():
    with pytest.raises(ParseError):
        parse_matrix("[[true, false], [true, true]]")


def test_json_rejects_out_of_range_entries():
    with pytest.raises(ParseError):
        parse_matrix("[[2, 0], [1, 1]]")


def test_non_square_reports_shape():
    with pytest.raises(NonSquare):
        parse_matrix("110,10,01")
    with pytest.raises(NonSquare):
        parse_matrix("[[1,1],[1]]")


def test_bad_char_reports_position():
    with pytest.raises(BadChar) as info:
        parse_matrix("1x,10")
    msg = str(info.value)
    assert "x" in msg


def test_zero_row_rejected():
    with pytest.raises(RowOrColumnZero):
        parse_matrix("00,11")


def test_zero_column_rejected():
    with pytest.raises(RowOrColumnZero):
        parse_matrix("10,10")


def test_empty_input_rejected():
    with pytest.raises(ParseError):
        parse_matrix("")


def test_from_rows_validates():
    with pytest.raises(RowOrColumnZero):
        TransitionMatrix.from_rows([[0, 0], [1, 1]])


def test_successor_table_and_row_sums():
    m = parse_matrix("010,001,110")
    assert m.successor_table() == ((1,), (2,), (0, 1))
    assert m.row_sums() == (1, 1, 2)


def test_round_trip_all_reference_rows():
    for row in REFERENCE_ROWS:
        m = row.parse()
        again = parse_matrix(m.to_row_string())
        assert again == m
        assert again.rows == m.rows


def test_matrices_hashable_and_equal():
    a = parse_matrix("11,10")
    b = parse_matrix("11,10")
    assert a == b
    assert hash(a) == hash(b)
    assert a != parse_matrix("11,11")
