import pytest

from core.excecoes import AntichainError
from models.anticadeias import (Antichain, GridPoint, all_antichains, antichain_from_pair, antichain_leq,
                                coordinate_systems, defines_line_segment, defines_line_segment_by_order,
                                equal_size_interpreted, equal_size_oracle, equal_size_search, is_coordinate_system,
                                join, join_irreducibles, line_of, meet, project_line, size_pair)

g = GridPoint
A = Antichain.of
O, P, Q = g(1, 1), g(3, 1), g(1, 3)


def test_antichain_order():
    assert antichain_leq(A([(1, 1)]), A([(2, 2)]))
    assert not antichain_leq(A([(1, 3), (3, 1)]), A([(2, 2)]))
    assert antichain_leq(A([]), A([(1, 1)]))


def test_join_and_meet():
    assert join(A([(1, 3)]), A([(3, 1)])) == A([(1, 3), (3, 1)])
    assert join(A([(1, 1)]), A([(2, 2)])) == A([(2, 2)])
    assert meet(A([(1, 3)]), A([(3, 1)])) == A([(1, 1)])


def test_comparable_points_are_rejected():
    with pytest.raises(AntichainError):
        A([(1, 1), (2, 2)])


def test_join_irreducibles_are_singletons():
    assert join_irreducibles(2) == {A([p]) for p in [(1, 1), (1, 2), (2, 1), (2, 2)]}


def test_antichains_count():
    # anticadeias não vazias de {1,2}²: quatro pontos e {(1,2),(2,1)}
    assert len(all_antichains(2)) == 5
    assert len(all_antichains(2, include_empty=True)) == 6


def test_size_pair_round_trip():
    anticadeia = antichain_from_pair({1, 3}, {1, 2})
    assert anticadeia == A([(1, 2), (3, 1)])
    assert size_pair(anticadeia) == ({1, 3}, {1, 2})
    with pytest.raises(AntichainError):
        antichain_from_pair({1, 2}, {1})


@pytest.mark.parametrize("p, q, esperado", [
    (g(1, 1), g(1, 3), True),
    (g(1, 2), g(3, 2), True),
    (g(1, 1), g(2, 2), False),
    (g(2, 2), g(1, 1), False),
    (g(2, 2), g(2, 2), False),
])
def test_line_segments(p, q, esperado):
    assert defines_line_segment(p, q) is esperado
    assert defines_line_segment_by_order(p, q, 3) is esperado


def test_line_and_projection():
    assert line_of(g(1, 1), g(1, 3), 3) == {g(1, 1), g(1, 2), g(1, 3)}
    assert line_of(g(1, 2), g(2, 2), 3) == {g(1, 2), g(2, 2), g(3, 2)}
    assert project_line(g(1, 1), g(1, 3), g(3, 2), 3) == g(1, 2)
    assert project_line(g(1, 1), g(1, 3), g(1, 2), 3) == g(1, 2)
    with pytest.raises(AntichainError):
        line_of(g(1, 1), g(2, 2), 3)


def test_coordinate_systems():
    assert is_coordinate_system(O, P, Q, 3)
    assert not is_coordinate_system(O, P, g(2, 1), 3)
    assert not is_coordinate_system(O, O, Q, 3)
    assert (O, P, Q) in coordinate_systems(3)


def test_equal_size():
    assert equal_size_interpreted(A([(1, 1)]), A([(2, 2)]), O, P, Q, 3)
    assert not equal_size_interpreted(A([(1, 2), (2, 1)]), A([(2, 2)]), O, P, Q, 3)
    assert equal_size_oracle(A([(1, 2), (2, 1)]), A([(2, 3), (3, 2)]), O, P, 3)


def test_witness_projections():
    a, b = A([(1, 3), (3, 1)]), A([(2, 3), (3, 2)])
    testemunha = equal_size_search(a, b, O, P, Q, 3)
    assert testemunha is not None
    assert len(testemunha.G) == 2


def test_search_needs_a_coordinate_system():
    with pytest.raises(AntichainError):
        equal_size_search(A([(1, 1)]), A([(2, 2)]), O, P, g(2, 1), 3)


def test_lines_away_from_the_corner():
    coluna = {g(2, 1), g(2, 2), g(2, 3)}
    assert line_of(g(2, 2), g(2, 3), 3) == coluna
    assert line_of(g(2, 1), g(2, 2), 3) == coluna
    assert line_of(g(2, 2), g(3, 2), 3) == {g(1, 2), g(2, 2), g(3, 2)}


@pytest.mark.parametrize("r, esperado", [
    (g(1, 2), g(2, 2)),
    (g(3, 1), g(2, 1)),
    (g(1, 3), g(2, 3)),
    (g(2, 1), g(2, 1)),
])
def test_projection_onto_a_middle_column(r, esperado):
    assert project_line(g(2, 2), g(2, 3), r, 3) == esperado


@pytest.mark.parametrize("a, b, esperado", [
    (A([(1, 2)]), A([(3, 3)]), True),
    (A([(1, 3), (3, 1)]), A([(2, 3), (3, 2)]), True),
    (A([(1, 2), (2, 1)]), A([(2, 2)]), False),
    (A([(1, 3), (2, 2), (3, 1)]), A([(1, 2), (2, 1)]), False),
])
def test_equal_size_with_a_middle_origin(a, b, esperado):
    o, p, q = g(2, 2), g(3, 2), g(2, 3)
    assert is_coordinate_system(o, p, q, 3)
    assert equal_size_oracle(a, b, o, p, 3) is esperado
    assert equal_size_interpreted(a, b, o, p, q, 3) is esperado
