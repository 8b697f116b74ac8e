# Suíte do núcleo de fórmulas: impressão/leitura, correção da tradução por
# interpretações e monotonicidade sob extensão do universo.
import random
from typing import List, Sequence

from models.estrutura import FiniteStructure, evaluate, restrict_universe
from models.formula import (And, Atom, Eq, Exists, Forall, Formula, Implies, Not, Or,
                            exists_many, forall_many, is_existential, is_universal, parse_formula, to_text)
from models.interpretacao import (Definition, Interpretation, identity_interpretation,
                                  interpret_structure, translate)
from verificacao.base import SuiteRun


def random_quantifier_free(rng: random.Random, depth: int, variables: Sequence[str]) -> Formula:
    if depth == 0 or rng.random() < 0.3:
        kind = rng.randrange(3)
        if kind == 0:
            return Eq(rng.choice(variables), rng.choice(variables))
        if kind == 1:
            return Atom("P", (rng.choice(variables),))
        return Atom("R", (rng.choice(variables), rng.choice(variables)))
    kind = rng.randrange(4)
    if kind == 0:
        return Not(random_quantifier_free(rng, depth - 1, variables))
    op = (And, Or, Implies)[kind - 1]
    return op(random_quantifier_free(rng, depth - 1, variables),
              random_quantifier_free(rng, depth - 1, variables))


def random_sentence(rng: random.Random, depth: int = 3, width: int = 3) -> Formula:
    """Sentença com prefixo misto de até `width` quantificadores sobre uma matriz sem quantificadores."""
    variables = [f"x{i}" for i in range(width)]
    phi = random_quantifier_free(rng, depth, variables)
    for var in reversed(variables):
        phi = (Exists if rng.random() < 0.5 else Forall)(var, phi)
    return phi


def random_formula(rng: random.Random, depth: int, variables: List[str]) -> Formula:
    """Fórmula qualquer, com quantificadores em qualquer posição."""
    if depth == 0 or rng.random() < 0.25:
        return random_quantifier_free(rng, 0, variables)
    kind = rng.randrange(6)
    if kind == 0:
        return Not(random_formula(rng, depth - 1, variables))
    if kind in (1, 2, 3):
        op = (And, Or, Implies)[kind - 1]
        return op(random_formula(rng, depth - 1, variables), random_formula(rng, depth - 1, variables))
    var = f"y{depth}"
    return (Exists if kind == 4 else Forall)(var, random_formula(rng, depth - 1, variables + [var]))


def random_structure(rng: random.Random, size: int) -> FiniteStructure:
    universe = [f"e{i}" for i in range(size)]
    unary = [(x,) for x in universe if rng.random() < 0.5] or [(universe[0],)]
    binary = [(x, y) for x in universe for y in universe if rng.random() < 0.4]
    return FiniteStructure.build(universe, {"P": (1, unary), "R": (2, binary)})


def pair_interpretation() -> Interpretation:
    """d = 2: pares (x1, x2) identificados pela primeira coordenada; reproduz a hospedeira."""
    return Interpretation(
        dimension=2,
        domain=Definition(("x1", "x2"), Eq("x1", "x1")),
        equivalence=Definition(("x1", "x2", "y1", "y2"), Eq("x1", "y1")),
        relations={
            "P": Definition(("x1", "x2"), Atom("P", ("x1",))),
            "R": Definition(("x1", "x2", "y1", "y2"), Atom("R", ("x1", "y1"))),
        },
    )


def relativized_interpretation() -> Interpretation:
    """d = 1 com domínio P: a subestrutura induzida pelos elementos de P."""
    return Interpretation(
        dimension=1,
        domain=Definition(("x",), Atom("P", ("x",))),
        equivalence=Definition(("x", "y"), Eq("x", "y")),
        relations={
            "P": Definition(("x",), Atom("P", ("x",))),
            "R": Definition(("x", "y"), Atom("R", ("x", "y"))),
        },
    )


def run(suite: SuiteRun) -> None:
    rng = suite.rng
    count = suite.params.fuzz

    # impressão e leitura
    for _ in range(count):
        phi = random_formula(rng, 4, ["x", "z"])
        text = to_text(phi)
        suite.guarded("parse(print(φ)) = φ", text, lambda: parse_formula(text) == phi)

    # tradução: H ⊨ translate(I, φ) sse I(H) ⊨ φ
    hosts = [random_structure(rng, rng.randint(2, 4)) for _ in range(max(4, count // 25))]
    for host in hosts:
        interpretations = [("identidade", identity_interpretation(host)),
                           ("pares", pair_interpretation()),
                           ("relativizada", relativized_interpretation())]
        for name, I in interpretations:
            target = interpret_structure(host, I)
            for _ in range(5):
                phi = random_sentence(rng, depth=2, width=2)
                suite.guarded(
                    f"tradução correta ({name})", to_text(phi),
                    lambda: evaluate(host, translate(I, phi)) == evaluate(target, phi),
                )

    # monotonicidade: ∃ sobe e ∀ desce quando o universo cresce
    for _ in range(count // 2):
        host = random_structure(rng, rng.randint(2, 5))
        keep = [x for x in host.universe if rng.random() < 0.6] or [host.universe[0]]
        sub = restrict_universe(host, keep)
        variables = ["x0", "x1"]
        matrix = random_quantifier_free(rng, 2, variables)
        existential = exists_many(variables, matrix)
        universal = forall_many(variables, matrix)
        suite.case("∃ é existencial", to_text(existential), is_existential(existential))
        suite.case("∀ é universal", to_text(universal), is_universal(universal))
        suite.guarded("∃ monótona", to_text(existential),
                      lambda: not evaluate(sub, existential) or evaluate(host, existential))
        suite.guarded("∀ antítona", to_text(universal),
                      lambda: not evaluate(host, universal) or evaluate(sub, universal))
