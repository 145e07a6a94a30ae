from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from designiso import (boolean_sqs, emit_design, emit_graph, fano, line_graph, parse_design, parse_graph,
                       scramble, sts)
from designiso.io import FormatError

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("name,design", [("fano", fano()), ("sqs8", boolean_sqs(3)), ("sts9", sts(9))])
def test_golden_design_bytes(name, design):
    assert emit_design(design) == (GOLDEN / f"{name}.design").read_text()


def test_golden_fano_graph_bytes():
    assert emit_graph(line_graph(fano())) == (GOLDEN / "fano.col").read_text()


def test_design_round_trip(designs):
    for D in designs.values():
        E = parse_design(emit_design(D))
        assert E.params == D.params and E.blocks == tuple(sorted(D.blocks))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2 ** 40))
def test_graph_round_trip(seed):
    G = line_graph(scramble(sts(13), seed))
    assert parse_graph(emit_graph(G)) == G


def test_comments_and_blank_lines():
    text = "# Fano\n\ndesign 2 7 3 1  # header\n7\n" + "\n".join(
        " ".join(map(str, B)) for B in fano().blocks) + "\n\n# end\n"
    assert parse_design(text).blocks == fano().blocks


def test_unsorted_blocks_are_sorted():
    text = "design 2 7 3 1\n7\n6 5 1\n3 1 0\n6 2 0\n5 4 0\n4 2 1\n5 3 2\n6 4 3\n"
    assert parse_design(text).blocks == fano().blocks


HEADER = "design 2 7 3 1\n"


@pytest.mark.parametrize("text,line,fragment", [
    ("", None, "empty"),
    ("desgin 2 7 3 1\n0\n", 1, "malformed header"),
    ("design 2 7 x 1\n0\n", 1, "malformed header"),
    ("design 3 7 2 1\n0\n", 1, "malformed header"),
    (HEADER, None, "missing block count"),
    (HEADER + "2\n0 1 3\n", 3, "block count mismatch"),
    (HEADER + "1\n0 1 3\n0 2 6\n", 4, "block count mismatch"),
    (HEADER + "1\n0 1 1\n", 3, "repeated point"),
    (HEADER + "1\n0 1\n", 3, "wrong block size"),
    (HEADER + "1\n0 1 7\n", 3, "out of range"),
    (HEADER + "2\n0 1 3\n3 1 0\n", 4, "duplicate block"),
    (HEADER + "1\n0 a 3\n", 3, "expected integers"),
])
def test_design_format_errors(text, line, fragment):
    with pytest.raises(FormatError, match=fragment) as info:
        parse_design(text)
    assert info.value.lineno == line


@pytest.mark.parametrize("text,line,fragment", [
    ("c only a comment\n", None, "missing p-line"),
    ("p edge 3 1\ne 1 4\n", 2, "out of range"),
    ("p edge 3 1\ne 2 2\n", 2, "self-loop"),
    ("p edge 3\n", 1, "malformed p-line"),
    ("p edge 3 0\np edge 3 0\n", 2, "second p-line"),
    ("p edge 3 0\nx 1 2\n", 2, "unknown line type"),
    ("c hi\ne 1 2\n", 2, "edge before"),
])
def test_graph_format_errors(text, line, fragment):
    with pytest.raises(FormatError, match=fragment) as info:
        parse_graph(text)
    assert info.value.lineno == line


def test_graph_warnings():
    with pytest.warns(UserWarning, match="duplicate edge"):
        G = parse_graph("p edge 3 2\ne 1 2\ne 2 1\n")
    assert G.num_edges == 1
    with pytest.warns(UserWarning, match="declares 5 edges"):
        parse_graph("c comment\np edge 3 5\ne 1 2\n")
