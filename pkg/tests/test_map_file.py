"""지도 텍스트 형식 테스트."""

import pytest

from src.core.exceptions import MapFormatError, MalformedPermutationError, NonPlanarMapError
from src.io_formats.map_file import parse_map, print_map
from src.maps.closure import generate_maps
from src.maps.rooted_map import RootedMap


class TestParseMap:
    def test_vertex_map(self, vertex_map):
        assert parse_map("edges 0\nroot none\n") == vertex_map

    def test_loop(self, loop_map):
        assert parse_map("edges 1\nvertex: 1 -1\nroot 1\n") == loop_map

    def test_comments_and_blank_lines(self, isthmus_map):
        text = "# 간선 하나\n\nedges 1   # 개수\nvertex: 1\n\nvertex: -1\nroot 1\n"
        assert parse_map(text) == isthmus_map

    def test_crlf(self, isthmus_map):
        assert parse_map("edges 1\r\nvertex: 1\r\nvertex: -1\r\nroot 1\r\n") == isthmus_map

    def test_torus_is_rejected(self):
        with pytest.raises(NonPlanarMapError):
            parse_map("edges 2\nvertex: 1 2 -1 -2\nroot 1\n")

    def test_missing_dart(self):
        with pytest.raises(MalformedPermutationError):
            parse_map("edges 2\nvertex: 1 -1 2\nroot 1\n")

    @pytest.mark.parametrize(
        ("text", "line"),
        [
            ("vertex: 1 -1\nedges 1\nroot 1\n", 1),
            ("edges one\nroot none\n", 1),
            ("edges -1\nroot none\n", 1),
            ("edges 0\nedges 0\nroot none\n", 2),
            ("edges 1\nvertex: 1 x\nroot 1\n", 2),
            ("edges 1\nvertex:\nroot 1\n", 2),
            ("edges 0\nfaces 1\nroot none\n", 2),
            ("edges 0\nroot none\nroot none\n", 3),
            ("edges 1\nvertex: 1 -1\nroot up\n", 3),
            ("root none\n", 0),
            ("edges 0\n", 0),
            ("edges 1\nvertex: 1 -1\nroot none\n", 0),
        ],
    )
    def test_format_errors(self, text, line):
        with pytest.raises(MapFormatError) as exc_info:
            parse_map(text)
        assert exc_info.value.line == line


class TestPrintMap:
    def test_vertex_map(self, vertex_map):
        assert print_map(vertex_map) == "edges 0\nroot none\n"

    def test_isthmus(self, isthmus_map):
        assert print_map(isthmus_map) == "edges 1\nvertex: 1\nvertex: -1\nroot 1\n"

    def test_canonical_relabels(self):
        m = RootedMap(1, ((-1, 1),), -1)
        assert print_map(m) == "edges 1\nvertex: 1 -1\nroot 1\n"
        assert print_map(m, canonical=False) == "edges 1\nvertex: 1 -1\nroot -1\n"

    def test_roundtrip_generated(self):
        for layer in generate_maps(4):
            for canonical in layer:
                text = print_map(canonical.map)
                assert parse_map(text) == canonical.map
                assert print_map(parse_map(text)) == text
