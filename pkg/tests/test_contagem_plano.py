import pytest

from core.excecoes import GeometryError
from models.contagem_plano import (PLArc, arc_components, equal_size_E, equal_size_witness, matching_conditions,
                                   route_disjoint_arcs, segments_intersect)
from models.incidencia import AffinePoint

pt = AffinePoint.of


@pytest.mark.parametrize("pares", [
    [(pt(0, 0), pt(10, 0)), (pt(0, 2), pt(10, 2))],
    [(pt(0, 0), pt(1, 1)), (pt(0, 1), pt(1, 0))],
    [(pt(0, 0), pt(3, 0)), (pt(1, 0), pt(4, 0)), (pt(2, 0), pt(5, 0))],
])
def test_routing_connects_each_pair(pares):
    sistema = route_disjoint_arcs(pares)
    assert len(sistema.arcs) == len(pares)
    for arco, (p, q) in zip(sistema.arcs, pares):
        assert arco.start == p and arco.end == q
    assert len(arc_components(sistema.arcs)) == len(pares)


def test_routing_rejects_repeated_endpoints():
    with pytest.raises(GeometryError):
        route_disjoint_arcs([(pt(0, 0), pt(1, 0)), (pt(0, 0), pt(2, 0))])


def test_empty_routing():
    assert route_disjoint_arcs([]).arcs == ()


def test_equal_size():
    assert equal_size_E([], [])
    assert not equal_size_E([pt(0, 0)], [pt(1, 0), pt(2, 0)])
    assert equal_size_E([pt(0, 0), pt(1, 0), pt(2, 0)], [pt(3, 0), pt(4, 0), pt(5, 0)])


def test_witness_satisfies_matching_conditions():
    A, B = [pt(0, 0), pt(0, 1)], [pt(1, 1), pt(1, 0)]
    veredito, sistema = equal_size_witness(A, B)
    assert veredito
    assert matching_conditions(sistema, A, B)
    assert not matching_conditions(sistema, A, B + [pt(7, 7)])


def test_overlapping_sets_are_rejected():
    with pytest.raises(GeometryError):
        equal_size_witness([pt(0, 0)], [pt(0, 0)])


def test_component_touching_two_points_of_A():
    arco = PLArc((pt(0, 0), pt(2, 0), pt(2, 2)))
    assert not matching_conditions([arco], [pt(0, 0), pt(2, 0)], [pt(2, 2), pt(5, 5)])


@pytest.mark.parametrize("vertices", [
    (pt(0, 0),),
    (pt(0, 0), pt(0, 0), pt(1, 1)),
    (pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)),
    (pt(0, 0), pt(2, 0), pt(1, 0)),
])
def test_invalid_arcs(vertices):
    with pytest.raises(GeometryError):
        PLArc(vertices)


def test_segments_intersect():
    assert segments_intersect((pt(0, 0), pt(2, 2)), (pt(0, 2), pt(2, 0)))
    assert segments_intersect((pt(0, 0), pt(1, 0)), (pt(1, 0), pt(1, 1)))
    assert not segments_intersect((pt(0, 0), pt(1, 0)), (pt(0, 1), pt(1, 1)))
    assert not segments_intersect((pt(0, 0), pt(1, 0)), (pt(2, 0), pt(3, 0)))


def test_touching_arcs_share_a_component():
    a = PLArc((pt(0, 0), pt(1, 0)))
    b = PLArc((pt(1, 0), pt(1, 1)))
    c = PLArc((pt(5, 5), pt(6, 6)))
    assert sorted(arc_components([a, b, c])) == [(0, 1), (2,)]
