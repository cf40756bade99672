"""Tests for the graph6 codec and line readers."""
import io

import networkx as nx
import pytest

from annihilator.domain.errors import Graph6Error, UnsupportedError
from annihilator.domain.models import Graph
from annihilator.infrastructure.graph6 import (
    decode_graph6,
    encode_graph6,
    iter_graph6_lines,
    read_graph6_file,
    read_graph6_stream,
)
from annihilator.services.graph_service import graph_from_edges


class TestDecode:
    """Test decoding graph6 strings."""

    def test_complete_graph(self, k4):
        """Test C~ is K4."""
        assert decode_graph6("C~") == k4

    def test_single_vertex(self):
        """Test @ is K1."""
        g = decode_graph6("@")
        assert g.n == 1
        assert g.m == 0

    def test_empty_order(self):
        """Test ? is the graph on zero vertices."""
        assert decode_graph6("?") == Graph(n=0, adjacency=())

    def test_small_graphs(self):
        """Test K2, 2K1 and K3."""
        assert decode_graph6("A_").edges() == [(0, 1)]
        assert decode_graph6("A?").m == 0
        assert decode_graph6("Bw").m == 3

    def test_trailing_newline_and_bytes(self, k4):
        """Test a single trailing newline and bytes input are tolerated."""
        assert decode_graph6("C~\n") == k4
        assert decode_graph6(b"C~\n") == k4

    @pytest.mark.parametrize(
        "text",
        [
            "",
            ">>graph6<<C~",
            "&C~",
            ":Fa@x^",
            "C",
            "C~~",
            "A`",
            "C\x7f",
            "~?@c",
        ],
    )
    def test_malformed_rejected(self, text):
        """Test headers, other formats, wrong lengths, padding bits and n >= 63."""
        with pytest.raises(Graph6Error):
            decode_graph6(text)

    def test_agrees_with_networkx(self, petersen, to_networkx):
        """Test decoding networkx output reproduces the graph."""
        data = nx.to_graph6_bytes(to_networkx(petersen), header=False).strip()
        assert decode_graph6(data) == petersen


class TestEncode:
    """Test encoding graphs as graph6."""

    def test_complete_graph(self, k4):
        """Test K4 encodes as C~."""
        assert encode_graph6(k4) == "C~"

    def test_matches_networkx(self, petersen, path5, cycle5, to_networkx):
        """Test byte-exact agreement with networkx."""
        for g in (petersen, path5, cycle5):
            expected = nx.to_graph6_bytes(to_networkx(g), header=False).strip().decode("ascii")
            assert encode_graph6(g) == expected

    def test_round_trip(self, random_graphs):
        """Test decode(encode(g)) == g."""
        for g in random_graphs:
            assert decode_graph6(encode_graph6(g)) == g

    def test_order_above_short_form(self):
        """Test n = 63 is unsupported."""
        with pytest.raises(UnsupportedError):
            encode_graph6(graph_from_edges(63, []))

    def test_largest_short_form(self):
        """Test n = 62 round-trips."""
        g = graph_from_edges(62, [(0, 61), (30, 31)])
        assert decode_graph6(encode_graph6(g)) == g


class TestReaders:
    """Test graph6 line readers."""

    def test_blank_lines_skipped(self):
        """Test blank lines and line endings are dropped."""
        assert list(iter_graph6_lines(["C~\n", "\n", "@\r\n"])) == ["C~", "@"]

    def test_header_line_rejected(self):
        """Test a header line is an error."""
        with pytest.raises(Graph6Error):
            list(iter_graph6_lines([">>graph6<<C~\n"]))

    def test_read_file(self, tmp_path):
        """Test reading a file of graph6 lines."""
        path = tmp_path / "graphs.g6"
        path.write_text("C~\n@\n\nBw\n")
        assert read_graph6_file(path) == ["C~", "@", "Bw"]

    def test_read_stream(self):
        """Test reading from a text stream."""
        assert read_graph6_stream(io.StringIO("A_\nA?\n")) == ["A_", "A?"]
