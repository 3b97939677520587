from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import digraphs
from pldkernels import DuplicateArc, cycle, fixture
from pldkernels.formats import (
    ParseError,
    digraph_from_json,
    digraph_to_json,
    format_edge_list,
    labeling_from_json,
    labeling_to_json,
    parse_dot,
    parse_edge_list,
    to_dot,
)

PROPS = settings(max_examples=100, deadline=None)


def test_edge_list_with_comments():
    D = parse_edge_list("# triangle\n3 3\n1 2\n2 3  # back\n3 1\n")
    assert D == cycle(3)


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("3\n", 1),
    ("3 x\n", 1),
    ("3 2\n1 2\n", 2),
    ("3 1\n1 4\n", 2),
    ("3 1\n1 2 3\n", 2),
    ("# c\n3 1\n1 b\n", 3),
])
def test_edge_list_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_edge_list(text)
    assert err.value.line == line


def test_edge_list_rejects_duplicates():
    with pytest.raises(DuplicateArc):
        parse_edge_list("2 2\n1 2\n1 2\n")


def test_dot_keeps_labels():
    D = fixture("fig2_right").digraph
    text = to_dot(D)
    assert '[label="xy"]' in text
    back = parse_dot(text)
    assert back == D and back.labels == D.labels


def test_labeling_json():
    assert labeling_to_json((2, 0, 1)) == {"1": 2, "2": 0, "3": 1}
    assert labeling_from_json({"1": 2, "2": 0, "3": 1}, 3) == (2, 0, 1)
    with pytest.raises(ParseError):
        labeling_from_json({"1": 0}, 2)


@PROPS
@given(digraphs(1, 7, in_degree_one=False))
def test_round_trips(D):
    assert parse_edge_list(format_edge_list(D)).arc_set == D.arc_set
    assert parse_dot(to_dot(D)).arc_set == D.arc_set
    assert digraph_from_json(digraph_to_json(D)) == D
