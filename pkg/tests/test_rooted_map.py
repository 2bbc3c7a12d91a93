"""RootedMap 검증, 면, 분류 테스트."""

import pytest

from src.core.exceptions import DisconnectedMapError, MalformedPermutationError, NonPlanarMapError
from src.maps.closure import generate_maps
from src.maps.rooted_map import (
    MapClass,
    RootedMap,
    classify_map,
    component_count,
    deletion_disconnects,
    is_isthmus,
    validate,
)


class TestConstruction:
    def test_rotation_is_normalized(self):
        assert RootedMap(1, ((-1, 1),), 1) == RootedMap(1, ((1, -1),), 1)
        assert RootedMap(1, ((-1,), (1,)), 1).rotation == ((1,), (-1,))

    def test_from_phi_roundtrip(self, isthmus_map, loop_map):
        for m in (isthmus_map, loop_map):
            assert RootedMap.from_phi(m.edges, m.phi, m.root) == m

    def test_vertex_map(self, vertex_map):
        assert vertex_map.is_vertex_map
        assert vertex_map.root is None
        assert vertex_map.darts == ()
        assert vertex_map.vertex_count == 1
        assert vertex_map.vertex_degrees() == [0]

    def test_str_keeps_labels(self, loop_map):
        assert str(loop_map) == "edges 1\nvertex: 1 -1\nroot 1\n"


class TestValidate:
    def test_vertex_map(self, vertex_map):
        report = validate(vertex_map)
        assert (report.vertices, report.edges, report.faces) == (1, 0, 1)
        assert report.outer_degree == 0

    def test_loop(self, loop_map):
        report = validate(loop_map)
        assert (report.vertices, report.edges, report.faces) == (1, 1, 2)
        assert report.euler_characteristic == 2

    def test_isthmus(self, isthmus_map):
        report = validate(isthmus_map)
        assert (report.vertices, report.faces, report.outer_degree) == (2, 1, 2)

    def test_torus_is_rejected(self, torus_map):
        with pytest.raises(NonPlanarMapError) as exc_info:
            validate(torus_map)
        assert exc_info.value.genus == 1

    def test_disconnected(self):
        m = RootedMap(2, ((1, -1), (2, -2)), 1)
        with pytest.raises(DisconnectedMapError) as exc_info:
            validate(m)
        assert exc_info.value.components == 2

    @pytest.mark.parametrize(
        "m",
        [
            RootedMap(1, ((1,),), 1),  # −1 누락
            RootedMap(1, ((1, -1, 1),), 1),  # 중복
            RootedMap(1, ((1, -1, 2),), 1),  # 범위 밖
            RootedMap(1, ((1, -1),), 2),  # 없는 루트
            RootedMap(1, ((1, -1),), None),  # 루트 없음
            RootedMap(0, (), 1),  # 꼭짓점 지도에 루트
            RootedMap(1, ((1, -1), ()), 1),  # 빈 주기
        ],
    )
    def test_malformed(self, m):
        with pytest.raises(MalformedPermutationError):
            validate(m)


class TestFaces:
    def test_vertex_map_has_one_empty_face(self, vertex_map):
        assert vertex_map.faces() == [()]
        assert vertex_map.outer_face_degree() == 0

    def test_isthmus_single_face(self, isthmus_map):
        assert isthmus_map.faces() == [(1, -1)]
        assert isthmus_map.outer_face() == (1, -1)

    def test_loop_two_faces(self, loop_map):
        assert loop_map.faces() == [(1,), (-1,)]
        assert loop_map.outer_face_degree() == 1

    def test_phi_convention(self, torus_map):
        # φ(d) = σ(−d)
        assert torus_map.phi == {1: -2, -2: -1, -1: 2, 2: 1}


class TestClassify:
    def test_classes(self, vertex_map, isthmus_map, loop_map):
        assert classify_map(vertex_map) is MapClass.VERTEX
        assert classify_map(isthmus_map) is MapClass.ISTHMIC
        assert classify_map(loop_map) is MapClass.NON_ISTHMIC

    def test_isthmus_agrees_with_connectivity(self):
        # 경로 꼭짓점 3개, 간선 2개
        m = RootedMap(2, ((1,), (-1, 2), (-2,)), 1)
        validate(m)
        for edge in (1, 2):
            assert is_isthmus(m, edge) is deletion_disconnects(m, edge) is True

    def test_loop_is_not_isthmus(self, loop_map):
        assert not is_isthmus(loop_map, -1)
        assert not deletion_disconnects(loop_map, 1)

    def test_isthmus_agrees_on_all_small_maps(self):
        for layer in generate_maps(4):
            for canonical in layer:
                m = canonical.map
                for edge in range(1, m.edges + 1):
                    assert is_isthmus(m, edge) is deletion_disconnects(m, edge)
                    assert is_isthmus(m, -edge) is is_isthmus(m, edge)


class TestComponentCount:
    def test_union_find(self):
        assert component_count(4, [(0, 1), (2, 3)]) == 2
        assert component_count(3, [(0, 1), (1, 2), (2, 0)]) == 1
        assert component_count(1, []) == 1
