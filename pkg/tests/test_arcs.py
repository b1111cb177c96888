import itertools

import pytest

from infgon.arcs import (
    MINUS,
    PLUS,
    BadTag,
    BoundaryEdge,
    EqualEdges,
    TaggedEdge,
    crossing_number,
    edges_in_window,
    elementary_moves_from,
    elementary_moves_into,
    is_elementary_move,
    is_valid_edge,
    parse_edge,
    translate,
    translate_inverse,
    validate_edge,
)
from infgon.disk import INF, DiskModel, MarkedPoint

M1 = DiskModel(1)
M1C = DiskModel(1, completed=True)
M2C = DiskModel(2, completed=True)


def E(a, b, tag=PLUS, ray_a=1, ray_b=1):
    return TaggedEdge(MarkedPoint(ray_a, a), MarkedPoint(ray_b, b), tag)


class TestValidity:
    def test_plain_chord_ok(self):
        validate_edge(M1, E(0, 2))

    def test_boundary_edge_rejected(self):
        with pytest.raises(BoundaryEdge):
            validate_edge(M1, E(0, 1))

    def test_tag_requires_equal_endpoints(self):
        with pytest.raises(BadTag):
            validate_edge(M1, E(0, 5, MINUS))

    def test_puncture_edges_take_both_tags(self):
        validate_edge(M1, E(0, 0, PLUS))
        validate_edge(M1, E(0, 0, MINUS))


class TestCrossing:
    def test_opposite_tags_at_distinct_points_cross(self):
        assert crossing_number(M1, E(2, 2, PLUS), E(5, 5, MINUS)) == 1
        assert crossing_number(M1, E(2, 2, PLUS), E(5, 5, PLUS)) == 0
        assert crossing_number(M1, E(2, 2, PLUS), E(2, 2, MINUS)) == 0

    def test_disjoint_arcs_do_not_cross(self):
        assert crossing_number(M1, E(0, 3), E(4, 7)) == 0

    def test_interleaved_arcs_cross(self):
        assert crossing_number(M1, E(0, 3), E(1, 5)) == 1

    def test_wrapping_arc_crosses_despite_shared_endpoint(self):
        # E(2,0) ends where E(0,5) starts but is forced through it
        assert crossing_number(M1, E(0, 5), E(2, 0)) == 1

    def test_fan_mates_do_not_cross(self):
        assert crossing_number(M1, E(0, 4), E(0, -3)) == 0

    def test_puncture_edge_versus_chord(self):
        assert crossing_number(M1, E(2, 2, MINUS), E(0, 4)) == 1
        assert crossing_number(M1, E(5, 5, MINUS), E(0, 4)) == 0

    def test_equal_edges_rejected(self):
        with pytest.raises(EqualEdges):
            crossing_number(M1, E(0, 2), E(0, 2))

    def test_symmetric_on_window(self):
        edges = edges_in_window(M1, 2)
        for e, f in itertools.combinations(edges, 2):
            assert crossing_number(M1, e, f) == crossing_number(M1, f, e)


class TestTranslate:
    def test_chord_shifts(self):
        assert translate(M1, E(0, 4)) == E(1, 5)

    def test_puncture_edge_swaps_tag(self):
        assert translate(M1, E(0, 0, PLUS)) == E(1, 1, MINUS)

    def test_accumulation_endpoint_is_sticky(self):
        e = TaggedEdge(MarkedPoint(1, INF), MarkedPoint(2, 3))
        assert translate(M2C, e) == TaggedEdge(MarkedPoint(1, INF), MarkedPoint(2, 4))

    def test_limit_chords_are_fixed(self):
        e = TaggedEdge(MarkedPoint(1, INF), MarkedPoint(2, INF))
        assert translate(M2C, e) == e
        assert translate_inverse(M2C, e) == e

    def test_inverse_round_trip(self):
        for e in edges_in_window(M2C, 2):
            assert translate_inverse(M2C, translate(M2C, e)) == e

    def test_no_periodicity_uncompleted(self):
        for e in edges_in_window(M1, 2):
            x = e
            for _ in range(6):
                x = translate(M1, x)
                assert x != e

    def test_preserves_crossing(self):
        edges = edges_in_window(M1, 2)
        for e, f in itertools.combinations(edges, 2):
            assert crossing_number(M1, e, f) == crossing_number(
                M1, translate(M1, e), translate(M1, f)
            )


class TestElementaryMoves:
    def test_short_chord_has_one_move(self):
        assert elementary_moves_from(M1, E(0, 2)) == {E(-1, 2)}

    def test_puncture_edge_moves_to_wrap_chord(self):
        assert elementary_moves_from(M1, E(0, 0, PLUS)) == {E(0, -1)}
        assert elementary_moves_from(M1, E(3, 3, PLUS)) == {E(3, 2)}

    def test_wrap_chord_spawns_both_tags(self):
        assert elementary_moves_from(M1, E(0, -1)) == {
            E(0, -2),
            E(-1, -1, PLUS),
            E(-1, -1, MINUS),
        }

    def test_generic_chord_has_two_moves(self):
        assert elementary_moves_from(M1, E(0, 4)) == {E(-1, 4), E(0, 3)}

    def test_membership_predicate(self):
        assert is_elementary_move(M1, E(0, 2), E(-1, 2))
        assert not is_elementary_move(M1, E(0, 2), E(0, 3))
        with pytest.raises(EqualEdges):
            is_elementary_move(M1, E(0, 2), E(0, 2))

    def test_into_matches_from(self):
        for e in edges_in_window(M1C, 2):
            for f in elementary_moves_into(M1C, e):
                assert e in elementary_moves_from(M1C, f)

    def test_limit_diagonal_moves(self):
        # a -> inf chords slide their finite endpoint only
        e = TaggedEdge(MarkedPoint(1, 2), MarkedPoint(1, INF))
        assert elementary_moves_from(M1C, e) == {
            TaggedEdge(MarkedPoint(1, 1), MarkedPoint(1, INF))
        }
        # puncture edges at the accumulation have no moves
        assert elementary_moves_from(M1C, TaggedEdge(MarkedPoint(1, INF), MarkedPoint(1, INF), MINUS)) == set()

    def test_lemma_on_window(self):
        for e in edges_in_window(M1, 2):
            for f in elementary_moves_from(M1, e):
                assert is_elementary_move(M1, translate(M1, f), e)


def test_parse_edge_round_trip():
    for text, edge in [
        ("E[(1,0)-(1,3)]", E(0, 3)),
        ("E[(1,2)-(1,2)]^-", E(2, 2, MINUS)),
        ("E[(1,inf)-(2,4)]", TaggedEdge(MarkedPoint(1, INF), MarkedPoint(2, 4))),
    ]:
        assert parse_edge(text) == edge
        assert parse_edge(repr(edge)) == edge


def test_edge_json_round_trip():
    e = E(2, 2, MINUS)
    assert TaggedEdge.from_json(e.to_json()) == e
