# Estruturas finitas e a semântica de Tarski das fórmulas sobre elas.
import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from core.excecoes import ArityError, UnboundVariableError, UnknownRelationError, WorkbenchError
from models.formula import (And, Atom, Eq, Exists, Formula, Implies, Not, Or,
                            free_vars, relation_arities)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Relation:
    arity: int
    tuples: FrozenSet[Tuple[str, ...]]


@dataclass(frozen=True)
class FiniteStructure:
    universe: Tuple[str, ...]
    relations: Mapping[str, Relation]
    # Índices por padrão de posições ligadas, montados sob demanda
    _indices: Dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if not self.universe:
            raise WorkbenchError("o universo de uma estrutura não pode ser vazio")
        if len(set(self.universe)) != len(self.universe):
            raise WorkbenchError("o universo tem elementos repetidos")
        members = set(self.universe)
        for name, relation in self.relations.items():
            for tup in relation.tuples:
                if len(tup) != relation.arity:
                    raise ArityError(f"tupla {tup} de '{name}' não tem aridade {relation.arity}")
                if not members.issuperset(tup):
                    raise WorkbenchError(f"tupla {tup} de '{name}' usa elementos fora do universo")

    @classmethod
    def build(cls, universe: Iterable[str], relations: Mapping[str, Tuple[int, Iterable[Sequence[str]]]]):
        """Atalho: relações dadas como (aridade, tuplas)."""
        return cls(
            universe=tuple(universe),
            relations={
                name: Relation(arity, frozenset(tuple(t) for t in tuples))
                for name, (arity, tuples) in relations.items()
            },
        )

    def holds(self, rel: str, *args: str) -> bool:
        return tuple(args) in self.relations[rel].tuples

    def index(self, rel: str, target: int, bound: Tuple[int, ...]) -> Dict[Tuple[str, ...], List[str]]:
        """Índice da relação: valores nas posições `bound` -> valores possíveis na posição `target`."""
        key = (rel, target, bound)
        cached = self._indices.get(key)
        if cached is None:
            cached = {}
            for tup in sorted(self.relations[rel].tuples):
                cached.setdefault(tuple(tup[i] for i in bound), []).append(tup[target])
            self._indices[key] = cached
        return cached


Evaluator = Callable[[Dict[str, str]], bool]


def _check_relations(S: FiniteStructure, phi: Formula) -> None:
    for rel, arity in relation_arities(phi).items():
        if rel not in S.relations:
            raise UnknownRelationError(f"relação '{rel}' não existe na estrutura")
        if S.relations[rel].arity != arity:
            raise ArityError(
                f"relação '{rel}' tem aridade {S.relations[rel].arity} na estrutura, {arity} na fórmula"
            )


def _guard_candidates(S: FiniteStructure, var: str, guard: Formula, scope: FrozenSet[str]):
    """Se a guarda é um átomo que amarra `var` às variáveis já ligadas, devolve uma função
    env -> candidatos para `var`. Caso contrário devolve None (percorre o universo todo)."""
    if isinstance(guard, Eq):
        other = guard.right if guard.left == var else guard.left if guard.right == var else None
        if other is not None and other != var and other in scope:
            return lambda env: (env[other],)
        return None
    if not isinstance(guard, Atom) or var not in guard.args:
        return None
    if any(a != var and a not in scope for a in guard.args):
        return None
    target = guard.args.index(var)
    bound = tuple(i for i, a in enumerate(guard.args) if a != var)
    bound_vars = tuple(guard.args[i] for i in bound)
    table = S.index(guard.rel, target, bound)
    empty: Tuple[str, ...] = ()
    return lambda env: table.get(tuple(env[v] for v in bound_vars), empty)


def _first_conjunct(phi: Formula) -> Formula:
    while isinstance(phi, And):
        phi = phi.left
    return phi


def compile_formula(S: FiniteStructure, phi: Formula, scope: FrozenSet[str]) -> Evaluator:
    """Transforma a fórmula numa closure env -> bool. `scope` são as variáveis já
    atribuídas quando a closure for chamada."""
    if isinstance(phi, Atom):
        tuples = S.relations[phi.rel].tuples
        args = phi.args
        return lambda env: tuple(env[a] for a in args) in tuples
    if isinstance(phi, Eq):
        left, right = phi.left, phi.right
        return lambda env: env[left] == env[right]
    if isinstance(phi, Not):
        sub = compile_formula(S, phi.sub, scope)
        return lambda env: not sub(env)
    if isinstance(phi, And):
        a, b = compile_formula(S, phi.left, scope), compile_formula(S, phi.right, scope)
        return lambda env: a(env) and b(env)
    if isinstance(phi, Or):
        a, b = compile_formula(S, phi.left, scope), compile_formula(S, phi.right, scope)
        return lambda env: a(env) or b(env)
    if isinstance(phi, Implies):
        a, b = compile_formula(S, phi.left, scope), compile_formula(S, phi.right, scope)
        return lambda env: (not a(env)) or b(env)

    var = phi.var
    inner_scope = scope | {var}
    body = compile_formula(S, phi.body, inner_scope)
    universe = S.universe
    # Guarda: primeiro conjunto do corpo (∃) ou do antecedente (∀)
    if isinstance(phi, Exists):
        guard = _first_conjunct(phi.body)
    else:
        guard = _first_conjunct(phi.body.left) if isinstance(phi.body, Implies) else None
    candidates = _guard_candidates(S, var, guard, inner_scope) if guard is not None else None
    want = isinstance(phi, Exists)

    def quantifier(env: Dict[str, str]) -> bool:
        previous = env.get(var, _MISSING)
        domain = universe if candidates is None else candidates(env)
        try:
            for value in domain:
                env[var] = value
                if body(env) == want:
                    return want
            return not want
        finally:
            if previous is _MISSING:
                env.pop(var, None)
            else:
                env[var] = previous

    return quantifier


_MISSING = object()


def evaluate(S: FiniteStructure, phi: Formula, asg: Optional[Mapping[str, str]] = None) -> bool:
    """
        Decide se S ⊨ φ[asg], com quantificadores percorrendo o universo de S.

        Args:
            S (FiniteStructure): Estrutura finita.
            phi (Formula): Fórmula a avaliar.
            asg (Mapping[str, str]): Valores das variáveis livres.

        Raises:
            UnboundVariableError: Variável livre sem valor.
            UnknownRelationError: Relação da fórmula não existe em S.

        Returns:
            bool: O valor de verdade.
    """
    asg = dict(asg or {})
    missing = free_vars(phi) - asg.keys()
    if missing:
        raise UnboundVariableError(f"variáveis livres sem valor: {', '.join(sorted(missing))}")
    members = set(S.universe)
    for var, value in asg.items():
        if value not in members:
            raise WorkbenchError(f"valor '{value}' de '{var}' não está no universo")
    _check_relations(S, phi)
    return compile_formula(S, phi, frozenset(asg))(asg)


def define_set(S: FiniteStructure, phi: Formula, variables: Sequence[str]) -> Set[Tuple[str, ...]]:
    """Extensão {ā : S ⊨ φ[ā]} na ordem de `variables`."""
    variables = tuple(variables)
    missing = free_vars(phi) - set(variables)
    if missing:
        raise UnboundVariableError(f"variáveis livres fora da lista: {', '.join(sorted(missing))}")
    _check_relations(S, phi)
    check = compile_formula(S, phi, frozenset(variables))
    result = set()
    env: Dict[str, str] = {}
    for values in itertools.product(S.universe, repeat=len(variables)):
        env.clear()
        env.update(zip(variables, values))
        if len(env) != len(variables):
            # Variável repetida na lista: só as tuplas coerentes contam
            if any(env[v] != x for v, x in zip(variables, values)):
                continue
        if check(env):
            result.add(values)
    return result


def restrict_universe(S: FiniteStructure, keep: Iterable[str]) -> FiniteStructure:
    """Subestrutura induzida; usada para checar monotonicidade sob extensão do universo."""
    kept = [x for x in S.universe if x in set(keep)]
    kept_set = set(kept)
    return FiniteStructure(
        universe=tuple(kept),
        relations={
            name: Relation(rel.arity, frozenset(t for t in rel.tuples if kept_set.issuperset(t)))
            for name, rel in S.relations.items()
        },
    )
