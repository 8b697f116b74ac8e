import pytest

from core.excecoes import InterpretationError
from models.estrutura import FiniteStructure, evaluate
from models.formula import And, Atom, Eq, parse_formula
from models.interpretacao import (Definition, Interpretation, identity_interpretation, induced_assignment,
                                  interpret_structure, interpret_structure_with_classes, is_isomorphic, translate)
from verificacao.formulas import pair_interpretation, relativized_interpretation

SENTENCAS = [
    "(exists x (P x))",
    "(forall x (exists y (Le x y)))",
    "(exists x (forall y (Le x y)))",
    "(forall x (forall y (implies (and (Le x y) (Le y x)) (= x y))))",
]


def _com_r(cadeia):
    # as interpretações de teste usam P e R
    return FiniteStructure.build(
        cadeia.universe,
        {"P": (1, cadeia.relations["P"].tuples), "R": (2, cadeia.relations["Le"].tuples)},
    )


def test_identity_interpretation_is_isomorphic(cadeia):
    assert is_isomorphic(interpret_structure(cadeia, identity_interpretation(cadeia)), cadeia)


@pytest.mark.parametrize("texto", SENTENCAS)
def test_translation_is_sound_for_identity(cadeia, texto):
    I = identity_interpretation(cadeia)
    phi = parse_formula(texto)
    assert evaluate(cadeia, translate(I, phi)) == evaluate(interpret_structure(cadeia, I), phi)


@pytest.mark.parametrize("interpretacao", [pair_interpretation, relativized_interpretation])
@pytest.mark.parametrize("texto", [s.replace("Le", "R") for s in SENTENCAS])
def test_translation_is_sound_with_domain_and_quotient(cadeia, interpretacao, texto):
    host = _com_r(cadeia)
    I = interpretacao()
    phi = parse_formula(texto)
    assert evaluate(host, translate(I, phi)) == evaluate(interpret_structure(host, I), phi)


def test_pair_interpretation_collapses_to_host(cadeia):
    host = _com_r(cadeia)
    assert is_isomorphic(interpret_structure(host, pair_interpretation()), host)


def test_relativized_domain_keeps_only_p(cadeia):
    host = _com_r(cadeia)
    assert len(interpret_structure(host, relativized_interpretation()).universe) == 1


def test_non_equivalence_is_rejected(cadeia):
    I = Interpretation(
        dimension=1,
        domain=Definition(("x",), Eq("x", "x")),
        equivalence=Definition(("x", "y"), Atom("Le", ("x", "y"))),
        relations={},
    )
    with pytest.raises(InterpretationError):
        interpret_structure(cadeia, I)


def test_definition_with_stray_free_variable():
    with pytest.raises(InterpretationError):
        Definition(("x",), Atom("Le", ("x", "y")))


@pytest.mark.parametrize("interpretacao, atribuicoes", [
    (pair_interpretation, [{"x_1": a, "x_2": c} for a in "abc" for c in "abc"]),
    (relativized_interpretation, [{"x": "b"}]),
])
def test_translation_with_free_variable(cadeia, interpretacao, atribuicoes):
    host = _com_r(cadeia)
    I = interpretacao()
    interpretada = interpret_structure_with_classes(host, I)
    phi = parse_formula("(exists y (and (R x y) (not (= x y))))")
    traducao = translate(I, phi)
    for asg in atribuicoes:
        induzida = induced_assignment(interpretada, I, phi, asg)
        assert evaluate(host, traducao, asg) == evaluate(interpretada.structure, phi, induzida)


def test_colliding_class_labels_are_rejected():
    # ("a", "b,c") e ("a,b", "c") teriam o mesmo rótulo "(a,b,c)"
    host = FiniteStructure.build(["a", "b,c", "a,b", "c"], {})
    pares = Interpretation(
        dimension=2,
        domain=Definition(("x1", "x2"), Eq("x1", "x1")),
        equivalence=Definition(("x1", "x2", "y1", "y2"), And(Eq("x1", "y1"), Eq("x2", "y2"))),
        relations={},
    )
    with pytest.raises(InterpretationError):
        interpret_structure(host, pares)
