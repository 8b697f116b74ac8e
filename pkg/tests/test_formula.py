import random

import pytest
from hypothesis import given, settings, strategies as st

from core.excecoes import ArityError, FormulaSyntaxError, UnboundVariableError, UnknownRelationError
from models.estrutura import define_set, evaluate, restrict_universe
from models.formula import (And, Atom, Eq, Exists, Forall, Not, free_vars, is_existential, is_universal,
                            parse_formula, to_text)
from verificacao.formulas import random_formula


def test_parse_builds_tree():
    phi = parse_formula("(exists x (and (P x) (not (= x y))))")
    assert phi == Exists("x", And(Atom("P", ("x",)), Not(Eq("x", "y"))))
    assert free_vars(phi) == {"y"}


@pytest.mark.parametrize("texto, posicao", [
    ("(exists x (P x)", 15),
    ("(P x))", 5),
    ("(and (P x) $)", 11),
])
def test_syntax_errors_carry_position(texto, posicao):
    with pytest.raises(FormulaSyntaxError) as erro:
        parse_formula(texto)
    assert erro.value.position == posicao


def test_inconsistent_arity_is_rejected():
    with pytest.raises(ArityError):
        parse_formula("(and (R x) (R x y))")


@settings(max_examples=100, derandomize=True)
@given(st.integers(min_value=0, max_value=10_000))
def test_print_then_parse_is_identity(seed):
    phi = random_formula(random.Random(seed), 4, ["x", "z"])
    assert parse_formula(to_text(phi)) == phi


def test_least_element_in_chain(cadeia):
    assert evaluate(cadeia, parse_formula("(exists x (forall y (Le x y)))"))
    assert not evaluate(cadeia, parse_formula("(forall x (exists y (and (Le x y) (not (= x y)))))"))


def test_assignment_and_unbound_variables(cadeia):
    phi = parse_formula("(Le x b)")
    assert evaluate(cadeia, phi, {"x": "a", "b": "b"})
    assert not evaluate(cadeia, phi, {"x": "c", "b": "b"})
    with pytest.raises(UnboundVariableError):
        evaluate(cadeia, phi, {"x": "a"})


def test_unknown_relation(cadeia):
    with pytest.raises(UnknownRelationError):
        evaluate(cadeia, parse_formula("(exists x (Q x))"))


def test_define_set_lists_extension(cadeia):
    below_b = define_set(cadeia, parse_formula("(exists y (and (P y) (Le x y)))"), ["x"])
    assert below_b == {("a",), ("b",)}


def test_quantifier_monotonicity(cadeia):
    existential = parse_formula("(exists x (P x))")
    universal = parse_formula("(forall x (Le x x))")
    assert is_existential(existential) and not is_universal(existential)
    assert is_universal(universal)
    sub = restrict_universe(cadeia, ["a", "c"])
    assert not evaluate(sub, existential) and evaluate(cadeia, existential)
    assert evaluate(cadeia, universal) and evaluate(sub, universal)


def test_negated_exists_counts_as_universal():
    assert is_universal(parse_formula("(not (exists x (P x)))"))
    assert is_existential(Not(Forall("x", Atom("P", ("x",)))))
