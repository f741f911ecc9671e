import os
from fractions import Fraction

import pytest

from lierig.catalog import heisenberg
from lierig.errors import ParseError
from lierig.exact import RatMatrix
from lierig.frontend.dsl import AlgebraDocument, format_vector, parse, serialize, tokenize_line

H1 = "algebra h1 dim 3\nbasis X1 X2 X3\n[X1,X2] = X3\n"


def test_parse_h1():
    doc = parse(H1)
    assert doc.name == "h1"
    assert doc.dim == 3
    assert doc.labels == ("X1", "X2", "X3")
    assert doc.constants() == heisenberg(1)


def test_comments_and_blank_lines():
    doc = parse("# Heisenberg\n\nalgebra h1 dim 3   # header\nbasis X1 X2 X3\n\n[X1,X2] = X3 # only bracket\n")
    assert doc.constants() == heisenberg(1)


def test_coefficients():
    doc = parse(
        "algebra c dim 3\nbasis A B C\n"
        "[A,B] = 2*B - 1/2*C\n"
        "[C,A] = -1*B + C - C\n"
    )
    (ab, ca) = doc.brackets
    assert ab.terms == (("B", Fraction(2)), ("C", Fraction(-1, 2)))
    assert ca.left == "C" and ca.right == "A"
    assert ca.terms == (("B", Fraction(-1)),)
    g = doc.constants()
    assert g.basis_bracket(0, 2) == (0, 1, 0)


def test_printed_coefficient_forms():
    doc = parse("algebra g dim 8\nbasis X1 X2 X3 X4 X5 X6 X7 X8\n[X6,X5] = 2*X5\n[X8,X3] = -1*X4\n")
    assert doc.brackets[0].terms == (("X5", Fraction(2)),)
    assert "[X8,X3] = -X4" in serialize(doc)


def test_torus_block():
    doc = parse(H1 + "torus t1\nrow 1 0 0\nrow 0 0 0\nrow 0 0 1\n")
    (block,) = doc.tori
    assert block.name == "t1"
    assert block.matrices == (RatMatrix.diagonal([1, 0, 1]),)
    assert doc.torus("t1") == block.matrices
    assert doc.torus("t9") is None


def test_empty_bracket_is_dropped():
    doc = parse("algebra a dim 2\nbasis A B\n[A,B] = A - A\n")
    assert doc.brackets == ()
    assert doc.constants().entries == ()


@pytest.mark.parametrize("text,line,message", [
    ("algebra a dim 2\nbasis A B\n[A,A] = B\n", 3, "self-bracket"),
    ("algebra a dim 2\nbasis A B\n[A,C] = B\n", 3, "unknown label"),
    ("algebra a dim 2\nbasis A B\n[A,B] = C\n", 3, "unknown label"),
    ("algebra a dim 2\nbasis A B\n[A,B] = B\n[B,A] = A\n", 4, "duplicate bracket"),
    ("algebra a dim 2\nbasis A B\ntorus t\nrow 1 0 0\n", 4, "row has 3 entries"),
    ("algebra a dim 2\nbasis A B\ntorus t\nrow 1 0\n", 3, "not a multiple"),
    ("basis A B\n", 1, "must start with"),
    ("algebra a dim 2\n", 1, "missing 'basis'"),
    ("algebra a dim 3/2\nbasis A B\n", 1, "integer"),
    ("algebra a dim 2\nbasis A B\n[A,B] = 1/0*B\n", 3, "zero denominator"),
    ("algebra a dim 2\nbasis A B\n[A,B] = B $\n", 3, "unexpected character"),
    ("algebra a dim 2\nbasis A B\n[A,B] B\n", 3, "expected '='"),
    ("algebra a dim 2\nbasis A B\nrow 1 0\n", 3, "outside a torus"),
    ("algebra a dim 2\nbasis A B C\n", 2, "expected 2"),
])
def test_parse_errors(text, line, message):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.line == line
    assert message in str(exc.value)
    assert str(exc.value).startswith(f"line {line}, column ")


def test_error_column_points_at_token():
    with pytest.raises(ParseError) as exc:
        parse("algebra a dim 2\nbasis A B\n[A,C] = B\n")
    assert exc.value.column == 4


def test_tokenize_strips_comments():
    tokens = tokenize_line("[X1,X2] = X3  # note", 1)
    assert [t.text for t in tokens] == ["[", "X1", ",", "X2", "]", "=", "X3"]
    assert tokens[1].column == 2


def test_format_vector():
    labels = ("X1", "X2", "X3")
    assert format_vector(labels, (1, 0, Fraction(-1, 2))) == "X1 - 1/2*X3"
    assert format_vector(labels, (0, -2, 0)) == "-2*X2"
    assert format_vector(labels, (0, 0, 0)) == "0"


def test_serialize_is_canonical():
    doc = parse("algebra c dim 3\nbasis A B C\n[B,C] = A\n[A,B] = C + 0*A\n")
    assert serialize(doc) == "algebra c dim 3\nbasis A B C\n[A,B] = C\n[B,C] = A\n"


def test_from_constants_round_trip():
    doc = AlgebraDocument.from_constants("h2", heisenberg(2))
    assert doc.labels == ("X1", "X2", "X3", "X4", "X5")
    assert parse(serialize(doc)) == doc


def test_round_trip_every_catalog_entry(catalog):
    for entry in catalog.concrete():
        doc = entry.document
        text = serialize(doc)
        assert parse(text) == doc, entry.name
        assert serialize(parse(text)) == text


def test_round_trip_catalog_files(catalog):
    for entry in catalog.concrete():
        path = os.path.join(catalog.data_dir, f"{entry.name}.lie")
        if not os.path.exists(path):
            continue
        with open(path, encoding="utf-8") as f:
            doc = parse(f.read())
        assert parse(serialize(doc)) == doc
        assert doc.constants() == entry.constants
