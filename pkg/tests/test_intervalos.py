from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from core.excecoes import InputFormatError, TruncationError, WorkbenchError
from models.margens import Margin
from models.estrutura import evaluate
from models.interpretacao import translate
from models.intervalos import (IntervalSet, arithmetic_interpretation, atom_between_lattice, betweenness_axioms, betweenness_of_order,
                               check_I, decode_afg, encode_afg, is_connected, is_connected_lattice, join,
                               lattice_add, lattice_divides, lattice_divides_checked, lattice_mul, leq, meet,
                               plus_sentence, relation_S, spectrum_S)

intervalos = st.lists(
    st.tuples(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=3)),
    max_size=4,
).map(lambda pares: IntervalSet.of(*((a, a + d) for a, d in pares)))


def test_of_merges_touching_intervals():
    A = IntervalSet.of((2, 3), (0, 1), (1, 2), (5, 5))
    assert A.components == ((0, 3), (5, 5))
    assert A.to_text() == "[0,3] [5,5]"


def test_parse():
    assert IntervalSet.parse("[0,1] [1/2,3] [5,5]") == IntervalSet.of((0, 3), (5, 5))
    assert IntervalSet.parse("[]").is_empty
    assert IntervalSet.parse("[1/3,1/3]").contains(Fraction(1, 3))


@pytest.mark.parametrize("texto", ["[0,1] lixo", "[a,1]", "0,1"])
def test_parse_rejects_garbage(texto):
    with pytest.raises(InputFormatError):
        IntervalSet.parse(texto)


def test_reversed_interval_is_rejected():
    with pytest.raises(WorkbenchError):
        IntervalSet.of((2, 1))


@settings(max_examples=150, derandomize=True)
@given(intervalos, intervalos)
def test_lattice_laws(A, B):
    assert join(A, B) == join(B, A)
    assert meet(A, B) == meet(B, A)
    assert join(A, meet(A, B)) == A
    assert meet(A, join(A, B)) == A
    assert leq(A, join(A, B)) and leq(meet(A, B), A)
    assert leq(A, B) == (join(A, B) == B)


def test_connectedness_and_bottom():
    assert is_connected(IntervalSet.of((0, 2)))
    assert not is_connected(IntervalSet.of((0, 1), (2, 3)))
    assert not is_connected(IntervalSet())
    assert is_connected_lattice(IntervalSet.of((0, 2)), grid=(0, 1, 2))
    assert not is_connected_lattice(IntervalSet.of((0, 0), (2, 2)), grid=(0, 1, 2))


def test_decode_then_encode():
    U = IntervalSet.parse("[0,1] [2,3]")
    tripla = decode_afg(U)
    assert tripla.E == {0, 2} and tripla.F == {1, 3} and tripla.G == {Fraction(3, 2)}
    assert encode_afg(tripla.E, tripla.F, tripla.G) == U


def test_decode_atom_and_empty():
    tripla = decode_afg(IntervalSet.of((1, 1)))
    assert encode_afg(tripla.E, tripla.F, tripla.G) == IntervalSet.of((1, 1))
    with pytest.raises(WorkbenchError):
        decode_afg(IntervalSet())


def test_betweenness_of_a_chain_is_recovered():
    relatorio = betweenness_axioms(betweenness_of_order(["a", "b", "c"]))
    assert relatorio.bounded
    assert set(relatorio.endpoints) == {"a", "c"}
    assert not betweenness_axioms({("a", "b", "c")}).bounded


def test_atom_between_in_the_lattice():
    assert atom_between_lattice(1, 0, 2)
    assert not atom_between_lattice(3, 0, 2)


@pytest.mark.parametrize("texto, semantico, falha", [
    ("[0,2]", True, None),
    ("[0,1]", True, None),
    ("[1,1]", False, "I1"),
    ("[0,1] [2,2]", False, "I1"),
])
def test_check_I(texto, semantico, falha):
    relatorio = check_I(IntervalSet.parse(texto), grid=(0, 1, 2))
    assert relatorio.semantic is semantico
    assert relatorio.failing == falha
    assert relatorio.agree


def test_relation_S_and_spectrum():
    b, c = {0, 3}, {1, 2}
    assert relation_S({5, 6}, b, c)
    assert not relation_S({5}, b, c)
    assert spectrum_S({0, 3, 5}, {1, 2, 4}) == {1, 2}


@pytest.mark.parametrize("m, n", [(0, 0), (0, 5), (2, 3), (4, 1)])
def test_lattice_add(m, n):
    resultado = lattice_add(m, n)
    assert resultado.value == m + n
    assert resultado.matches


def test_lattice_divides():
    assert lattice_divides(2, 4)
    assert lattice_divides(3, 6)
    assert not lattice_divides(3, 4)


def test_divisibility_is_found_by_searching_S():
    resultado = lattice_divides_checked(2, 4)
    assert resultado.value is True and resultado.margin == Margin.EXACT
    b = resultado.witness["b"].endpoints()
    c = resultado.witness["c"].endpoints()
    assert spectrum_S(b, c) == {2}


def test_non_divisibility_comes_from_a_dead_end_in_S():
    # 3 pontos de c cabem no primeiro salto, o quarto fica sozinho
    resultado = lattice_divides_checked(3, 4)
    assert resultado.value is False and resultado.margin == Margin.EXACT
    assert resultado.witness["reached"] == 6
    assert not relation_S({0, 1, 2}, {6, 8}, {7})


def test_small_grid_is_outside_the_margin():
    assert lattice_divides_checked(2, 4, grid_size=5).margin == Margin.BOUNDARY_EXCLUDED
    assert lattice_divides_checked(2, 4, grid_size=9).value is True


@pytest.mark.parametrize("m, n", [(0, 4), (2, 3), (1, 1)])
def test_lattice_mul(m, n):
    assert lattice_mul(m, n).value == m * n


def test_lattice_mul_reports_required_bound():
    with pytest.raises(TruncationError) as erro:
        lattice_mul(9, 9, bound=10)
    assert erro.value.required == 342


@pytest.mark.parametrize("m, n, k", [(1, 1, 2), (1, 1, 1), (0, 2, 2)])
def test_translated_addition_sentence(m, n, k):
    pacote = arithmetic_interpretation(base_size=3)
    sentenca = translate(pacote.interpretation, plus_sentence(m, n, k))
    assert evaluate(pacote.host.structure, sentenca) == (m + n == k)
