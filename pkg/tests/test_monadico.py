import pytest

from core.excecoes import TruncationError, WorkbenchError
from models.estrutura import FiniteStructure, evaluate
from models.formula import parse_formula
from models.margens import Margin
from models.monadico import (FiniteSemigroup, TruncatedNatSemigroup, WeakPowerUniverse, addition_on_classes,
                             divides, equal_size_E, in_generated, lcm_via_divides, multiplication_pipeline,
                             multiply_from_plus_divides, sequence_family_check, star_property)


@pytest.fixture
def N30():
    return TruncatedNatSemigroup(30)


def test_multiples_are_generated(N30):
    resultado = in_generated(N30, 3, 9, cap=6)
    assert resultado.value is True
    assert resultado.margin == Margin.EXACT
    assert set(resultado.witness["X"]) == {3, 6, 9}


def test_non_multiples_are_not_generated(N30):
    resultado = in_generated(N30, 3, 7, cap=6)
    assert resultado.value is False
    assert resultado.margin == Margin.EXACT


def test_torsion_elements_use_the_finite_semigroup():
    Z5 = FiniteSemigroup.cyclic_group(5)
    assert in_generated(Z5, 2, 3).value is True
    R = FiniteSemigroup.right_zero(["a", "b"])
    assert in_generated(R, "a", "b").value is False


def test_non_associative_table_is_rejected():
    tabela = {(x, y): (x - y) % 3 for x in range(3) for y in range(3)}
    with pytest.raises(WorkbenchError):
        FiniteSemigroup(range(3), tabela)


def test_star_property(N30):
    assert star_property(N30, 3, {3, 6, 9})
    assert star_property(N30, 3, {3, 6})
    assert not star_property(N30, 3, {6, 9})
    assert not star_property(FiniteSemigroup.cyclic_group(4), 1, {0, 1, 2, 3})


@pytest.mark.parametrize("k, n, esperado", [(3, 12, True), (5, 12, False), (1, 7, True), (4, 4, True)])
def test_divides(k, n, esperado):
    assert divides(k, n) is esperado


@pytest.mark.parametrize("x", [1, 2, 3, 4])
def test_lcm_of_consecutive_numbers(N30, x):
    assert lcm_via_divides(N30, x, x + 1) == x * x + x


@pytest.mark.parametrize("x", [1, 2, 3])
@pytest.mark.parametrize("y", [1, 2, 3])
def test_multiplication_from_plus_and_divides(x, y):
    assert multiply_from_plus_divides(x, y) == x * y


def test_pipeline_stages():
    trace = multiplication_pipeline(2, 3)
    assert dict(trace.stages) == {"x+y": 5, "(x+y)^2": 25, "x^2": 4, "y^2": 9, "2xy": 12, "xy": 6}


def test_small_bound_reports_required_size():
    with pytest.raises(TruncationError) as erro:
        multiply_from_plus_divides(2, 3, bound=10)
    assert erro.value.required == 30


def test_equal_size():
    assert equal_size_E({1, 2}, {2, 3})
    assert equal_size_E(set(), set())
    assert not equal_size_E({1}, {1, 2})


def test_addition_on_classes():
    base = range(1, 7)
    assert addition_on_classes({1}, {2, 3}, {4, 5, 6}, base).value is True
    assert addition_on_classes({1}, {1}, {1, 2}, base).value is True
    assert addition_on_classes({1}, {1}, {1, 2, 3}, base).value is False


def test_addition_outside_the_base_is_excluded():
    resultado = addition_on_classes({1, 2}, {3, 4}, {1}, (1, 2, 3))
    assert resultado.value is None
    assert resultado.margin == Margin.BOUNDARY_EXCLUDED


def test_weak_power_universe(cadeia):
    W = WeakPowerUniverse(cadeia, cap=2)
    assert len(W.structure.universe) == 7
    assert W.label(["b", "a"]) == "{a,b}"
    assert W.members(W.atom("c")) == frozenset({"c"})
    # o vazio é o menor elemento
    assert evaluate(W.structure, parse_formula("(exists x (forall y (leq x y)))"))


def test_sequence_family_constructive_row():
    mesmo_tamanho = lambda a, b, c: len(a) == len(c)  # noqa: E731
    relatorio = sequence_family_check(mesmo_tamanho, [2])
    assert relatorio.realized
    assert relatorio.witness == ((1, 4), (2, 3))
    assert relatorio.spectrum == (2,)


def test_semigroup_read_from_structure():
    Z3 = FiniteStructure.build(["0", "1", "2"], {"prod": (3, [
        (str(x), str(y), str((x + y) % 3)) for x in range(3) for y in range(3)
    ])})
    S = FiniteSemigroup.from_structure(Z3)
    assert S.product("2", "2") == "1"
    assert in_generated(S, "1", "2").value is True
    with pytest.raises(WorkbenchError):
        FiniteSemigroup.from_structure(Z3, relation="soma")


@pytest.mark.parametrize("t", range(1, 13))
def test_membership_is_decided_by_the_star_property(t):
    N12 = TruncatedNatSemigroup(12)
    resultado = in_generated(N12, 3, t, cap=12)
    assert resultado.value is (t % 3 == 0)
    assert resultado.margin == Margin.EXACT
    if resultado.value:
        X = set(resultado.witness["X"])
        assert t in X and star_property(N12, 3, X)
