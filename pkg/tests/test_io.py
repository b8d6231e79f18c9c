"""Graph file parsing, emission, and the fixture catalogue."""

import pytest

from signedconn import GraphSyntaxError, VertexOutOfRange
from signedconn.io import FIXTURE_NAMES, emit, fixture, fixtures, parse


class TestParse:
    def test_single_negative_edge(self):
        g = parse("signed-graph n=2\n0 1 -\n")
        assert g == fixture("N2")

    def test_negative_loop(self):
        g = parse("signed-graph n=1\n0 0 -\n")
        assert g == fixture("NEGLOOP")

    def test_comments_and_blank_lines(self):
        g = parse("# a triangle\nsigned-graph n=3\n\n0 1 +\n1 2 +\n# last edge\n2 0 -\n")
        assert g == fixture("T-")

    def test_repeated_lines_are_parallel_edges(self):
        g = parse("signed-graph n=2\n0 1 +\n0 1 +\n")
        assert g.m == 2

    def test_missing_header(self):
        with pytest.raises(GraphSyntaxError) as exc:
            parse("0 1 +\n")
        assert exc.value.line == 1

    def test_bad_edge_line(self):
        with pytest.raises(GraphSyntaxError) as exc:
            parse("signed-graph n=2\n0 1 ?\n")
        assert exc.value.line == 2

    def test_vertex_out_of_range_carries_line(self):
        with pytest.raises(VertexOutOfRange) as exc:
            parse("signed-graph n=2\n0 5 +\n")
        assert exc.value.line == 2

    def test_empty_file(self):
        with pytest.raises(GraphSyntaxError):
            parse("")


class TestRoundTrip:
    def test_emit_parse_identity(self):
        for name in FIXTURE_NAMES:
            g = fixture(name)
            assert parse(emit(g)) == g

    def test_parse_emit_identity_on_canonical_file(self):
        text = emit(fixture("T-"))
        assert emit(parse(text)) == text


class TestFixtures:
    def test_catalogue_is_complete(self):
        assert set(FIXTURE_NAMES) == {
            "P2", "N2", "T+", "T-", "NEGLOOP", "NECK2", "TIGHT",
            "LOOSE", "THETA", "UK4", "DISJB", "C4", "C5",
        }
        assert len(fixtures()) == 13

    def test_shapes(self):
        assert fixture("TIGHT").n == 5 and fixture("TIGHT").m == 6
        assert fixture("LOOSE").n == 6 and fixture("LOOSE").m == 7
        assert fixture("C5").m == 5
