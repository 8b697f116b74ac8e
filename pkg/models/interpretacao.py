# Interpretações: domínio, equivalência e relações definidos por fórmulas na estrutura
# hospedeira. Daqui saem a tradução de fórmulas e a estrutura interpretada explícita.
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple

from core.excecoes import InterpretationError
from models.estrutura import FiniteStructure, Relation, compile_formula, define_set, _check_relations
from models.formula import (And, Atom, Eq, Exists, Formula, FreshNames, Implies, Not, Or,
                            all_vars, exists_many, forall_many, free_vars, substitute, verum)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Definition:
    """Fórmula com a lista ordenada das variáveis que fazem papel de argumento."""
    variables: Tuple[str, ...]
    formula: Formula

    def __post_init__(self):
        extra = free_vars(self.formula) - set(self.variables)
        if extra:
            raise InterpretationError(
                f"fórmula da definição tem variáveis livres fora da lista: {', '.join(sorted(extra))}"
            )

    def instantiate(self, actual: Sequence[str], fresh: FreshNames) -> Formula:
        if len(actual) != len(self.variables):
            raise InterpretationError(
                f"definição espera {len(self.variables)} argumentos, recebeu {len(actual)}"
            )
        return substitute(self.formula, dict(zip(self.variables, actual)), fresh)


@dataclass(frozen=True)
class Interpretation:
    dimension: int
    domain: Definition
    equivalence: Definition
    relations: Mapping[str, Definition]

    def __post_init__(self):
        d = self.dimension
        if d < 1:
            raise InterpretationError("a dimensão de uma interpretação é pelo menos 1")
        if len(self.domain.variables) != d:
            raise InterpretationError("a fórmula de domínio precisa de d variáveis")
        if len(self.equivalence.variables) != 2 * d:
            raise InterpretationError("a fórmula de equivalência precisa de 2d variáveis")
        for name, definition in self.relations.items():
            if len(definition.variables) % d:
                raise InterpretationError(f"relação '{name}' com número de variáveis não múltiplo de d")

    def arity(self, name: str) -> int:
        return len(self.relations[name].variables) // self.dimension

    def used_names(self) -> set:
        names = set(self.domain.variables) | all_vars(self.domain.formula)
        names |= set(self.equivalence.variables) | all_vars(self.equivalence.formula)
        for definition in self.relations.values():
            names |= set(definition.variables) | all_vars(definition.formula)
        return names


def identity_interpretation(S: FiniteStructure) -> Interpretation:
    """d = 1, domínio trivial, equivalência = igualdade, cada relação em si mesma."""
    relations = {}
    for name, rel in S.relations.items():
        variables = tuple(f"x{i}" for i in range(1, rel.arity + 1))
        relations[name] = Definition(variables, Atom(name, variables))
    return Interpretation(
        dimension=1,
        domain=Definition(("x",), verum("x")),
        equivalence=Definition(("x", "y"), Eq("x", "y")),
        relations=relations,
    )


def free_variable_map(I: Interpretation, phi: Formula) -> Dict[str, Tuple[str, ...]]:
    """Cada variável livre x de φ vira a d-upla x_1..x_d (ou o próprio x quando d = 1)."""
    if I.dimension == 1:
        return {x: (x,) for x in sorted(free_vars(phi))}
    return {x: tuple(f"{x}_{i}" for i in range(1, I.dimension + 1)) for x in sorted(free_vars(phi))}


def translate(I: Interpretation, phi: Formula) -> Formula:
    """
        Traduz uma fórmula da linguagem alvo para a linguagem da hospedeira.

        Quantificadores viram d-uplas de quantificadores relativizados ao domínio,
        igualdade vira a equivalência e cada átomo vira a fórmula associada.

        Args:
            I (Interpretation): A interpretação.
            phi (Formula): Fórmula na linguagem alvo.

        Raises:
            InterpretationError: Relação de φ sem definição na interpretação.

        Returns:
            Formula: Fórmula na linguagem da hospedeira.
    """
    env = free_variable_map(I, phi)
    used = I.used_names() | all_vars(phi)
    for names in env.values():
        used.update(names)
    fresh = FreshNames(used)
    return _translate(I, phi, env, fresh)


def _translate(I: Interpretation, phi: Formula, env: Dict[str, Tuple[str, ...]], fresh: FreshNames) -> Formula:
    if isinstance(phi, Atom):
        definition = I.relations.get(phi.rel)
        if definition is None:
            raise InterpretationError(f"relação '{phi.rel}' não tem definição na interpretação")
        if len(definition.variables) != len(phi.args) * I.dimension:
            raise InterpretationError(f"aridade de '{phi.rel}' não confere com a interpretação")
        actual = [name for arg in phi.args for name in env[arg]]
        return definition.instantiate(actual, fresh)
    if isinstance(phi, Eq):
        return I.equivalence.instantiate(env[phi.left] + env[phi.right], fresh)
    if isinstance(phi, Not):
        return Not(_translate(I, phi.sub, env, fresh))
    if isinstance(phi, (And, Or, Implies)):
        return type(phi)(_translate(I, phi.left, env, fresh), _translate(I, phi.right, env, fresh))
    names = tuple(fresh() for _ in range(I.dimension))
    inner = dict(env)
    inner[phi.var] = names
    domain = I.domain.instantiate(names, fresh)
    body = _translate(I, phi.body, inner, fresh)
    if isinstance(phi, Exists):
        return exists_many(names, And(domain, body))
    return forall_many(names, Implies(domain, body))


def _class_label(rep: Tuple[str, ...]) -> str:
    return rep[0] if len(rep) == 1 else "(" + ",".join(rep) + ")"


@dataclass(frozen=True)
class InterpretedStructure:
    """Estrutura interpretada junto com o mapa classe -> representantes."""
    structure: FiniteStructure
    classes: Mapping[str, Tuple[Tuple[str, ...], ...]]

    def class_of(self, tup: Tuple[str, ...]) -> str:
        for label, members in self.classes.items():
            if tup in members:
                return label
        raise InterpretationError(f"{tup} não está no domínio da interpretação")


def interpret_structure_with_classes(S: FiniteStructure, I: Interpretation) -> InterpretedStructure:
    d = I.dimension
    domain = sorted(define_set(S, I.domain.formula, I.domain.variables))
    if not domain:
        raise InterpretationError("o domínio da interpretação é vazio")
    _check_relations(S, I.equivalence.formula)
    eq_vars = I.equivalence.variables
    eq_check = compile_formula(S, I.equivalence.formula, frozenset(eq_vars))

    def related(a: Tuple[str, ...], b: Tuple[str, ...]) -> bool:
        return eq_check(dict(zip(eq_vars, a + b)))

    # Classe de cada tupla; é equivalência sse reflexiva e classes de relacionados coincidem
    neighbours = {a: frozenset(b for b in domain if related(a, b)) for a in domain}
    for a in domain:
        if a not in neighbours[a]:
            raise InterpretationError(f"a equivalência não é reflexiva em {a}")
        for b in neighbours[a]:
            if neighbours[b] != neighbours[a]:
                raise InterpretationError(f"a equivalência falha simetria/transitividade em {a}, {b}")

    classes: Dict[str, Tuple[Tuple[str, ...], ...]] = {}
    label_of: Dict[Tuple[str, ...], str] = {}
    for a in domain:
        if a in label_of:
            continue
        members = tuple(sorted(neighbours[a]))
        label = _class_label(members[0])
        if label in classes:
            raise InterpretationError(f"duas classes com o rótulo '{label}': {classes[label][0]} e {members[0]}")
        classes[label] = members
        for m in members:
            label_of[m] = label

    relations = {}
    for name, definition in I.relations.items():
        _check_relations(S, definition.formula)
        arity = len(definition.variables) // d
        check = compile_formula(S, definition.formula, frozenset(definition.variables))
        image: Dict[Tuple[str, ...], bool] = {}
        for combo in itertools.product(domain, repeat=arity):
            flat = tuple(x for part in combo for x in part)
            verdict = check(dict(zip(definition.variables, flat)))
            key = tuple(label_of[part] for part in combo)
            known = image.setdefault(key, verdict)
            if known != verdict:
                raise InterpretationError(f"a relação '{name}' não é invariante pela equivalência em {key}")
        relations[name] = Relation(arity, frozenset(k for k, v in image.items() if v))

    logger.debug("interpretação: %d tuplas no domínio, %d classes", len(domain), len(classes))
    structure = FiniteStructure(universe=tuple(classes), relations=relations)
    return InterpretedStructure(structure=structure, classes=classes)


def interpret_structure(S: FiniteStructure, I: Interpretation) -> FiniteStructure:
    """Materializa a estrutura interpretada: universo = classes de ε, relações = imagens."""
    return interpret_structure_with_classes(S, I).structure


def induced_assignment(interpreted: InterpretedStructure, I: Interpretation, phi: Formula,
                       host_asg: Mapping[str, str]) -> Dict[str, str]:
    """Atribuição na estrutura interpretada correspondente a uma atribuição na hospedeira
    (para as variáveis livres traduzidas por free_variable_map)."""
    result = {}
    for x, names in free_variable_map(I, phi).items():
        result[x] = interpreted.class_of(tuple(host_asg[n] for n in names))
    return result


def is_isomorphic(A: FiniteStructure, B: FiniteStructure) -> bool:
    """Isomorfismo por busca com refinamento por assinatura de graus. Só para estruturas pequenas."""
    if len(A.universe) != len(B.universe) or set(A.relations) != set(B.relations):
        return False
    for name in A.relations:
        if A.relations[name].arity != B.relations[name].arity:
            return False
        if len(A.relations[name].tuples) != len(B.relations[name].tuples):
            return False

    def signature(S: FiniteStructure, x: str):
        sig = []
        for name in sorted(S.relations):
            rel = S.relations[name]
            for pos in range(rel.arity):
                sig.append(sum(1 for t in rel.tuples if t[pos] == x))
        return tuple(sig)

    sig_a = {x: signature(A, x) for x in A.universe}
    sig_b = {y: signature(B, y) for y in B.universe}
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return False
    order = sorted(A.universe, key=lambda x: sig_a[x])
    mapping: Dict[str, str] = {}
    used: set = set()

    def consistent() -> bool:
        for name, rel in A.relations.items():
            target = B.relations[name].tuples
            for t in rel.tuples:
                if all(x in mapping for x in t) and tuple(mapping[x] for x in t) not in target:
                    return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in B.universe:
            if y in used or sig_b[y] != sig_a[x]:
                continue
            mapping[x] = y
            used.add(y)
            if consistent() and search(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return search(0)
