# Estrutura monádica fraca W(M) truncada e as definições sobre semigrupos:
# produto de conjuntos, torção, a propriedade (*), t ∈ s^N, divisibilidade,
# multiplicação a partir de (N, +, |), o "mesmo tamanho" E e a soma nas classes.
import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import (Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence,
                    Tuple)

from core.config import DEFAULT_CAP
from core.excecoes import TruncationError, WorkbenchError
from models.estrutura import FiniteStructure, Relation
from models.margens import Checked, Margin

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Semigrupos
# ---------------------------------------------------------------------------

class FiniteSemigroup:
    """Semigrupo finito dado pela tabela completa do produto."""

    def __init__(self, universe: Sequence[Hashable], table: Dict[Tuple[Hashable, Hashable], Hashable]):
        self.universe = tuple(universe)
        self.table = dict(table)
        members = set(self.universe)
        for x, y in itertools.product(self.universe, repeat=2):
            if (x, y) not in self.table:
                raise WorkbenchError(f"produto {x}·{y} não definido na tabela")
            if self.table[(x, y)] not in members:
                raise WorkbenchError(f"produto {x}·{y} fora do universo")
        # Associatividade é checada, não suposta
        for x, y, z in itertools.product(self.universe, repeat=3):
            if self.table[(self.table[(x, y)], z)] != self.table[(x, self.table[(y, z)])]:
                raise WorkbenchError(f"a operação não é associativa em ({x}, {y}, {z})")

    def product(self, x, y):
        return self.table[(x, y)]

    @classmethod
    def from_structure(cls, S: FiniteStructure, relation: str = "prod") -> "FiniteSemigroup":
        """Lê o semigrupo de uma estrutura com o gráfico da operação em 'prod' (aridade 3)."""
        rel = S.relations.get(relation)
        if rel is None or rel.arity != 3:
            raise WorkbenchError(f"a estrutura precisa da relação '{relation}' de aridade 3")
        table = {}
        for x, y, z in rel.tuples:
            if table.setdefault((x, y), z) != z:
                raise WorkbenchError(f"'{relation}' não é o gráfico de uma função em ({x}, {y})")
        return cls(S.universe, table)

    @classmethod
    def cyclic_group(cls, n: int) -> "FiniteSemigroup":
        elements = list(range(n))
        return cls(elements, {(x, y): (x + y) % n for x in elements for y in elements})

    @classmethod
    def right_zero(cls, elements: Sequence[Hashable]) -> "FiniteSemigroup":
        return cls(elements, {(x, y): y for x in elements for y in elements})


class TruncatedNatSemigroup:
    """(N, +) truncado em {1..N}: a soma só existe quando não passa de N."""

    def __init__(self, bound: int):
        if bound < 1:
            raise WorkbenchError("o limite do truncamento é pelo menos 1")
        self.bound = bound
        self.universe = tuple(range(1, bound + 1))

    def product(self, x: int, y: int) -> Optional[int]:
        total = x + y
        return total if total <= self.bound else None


Semigroup = object  # FiniteSemigroup ou TruncatedNatSemigroup


def set_product(S, X: Iterable, Y: Iterable) -> FrozenSet:
    """X · Y = {x · y}. Produto que escapa do truncamento é erro."""
    result = set()
    for x in X:
        for y in Y:
            p = S.product(x, y)
            if p is None:
                raise TruncationError(f"o produto {x}·{y} escapa do truncamento", required=x + y)
            result.add(p)
    return frozenset(result)


def generated(S, s) -> Tuple[Tuple, bool]:
    """Potências s, s², s³, ... dentro do truncamento. O booleano diz se a órbita
    fechou (s é de torção) antes de escapar."""
    powers = [s]
    seen = {s}
    current = s
    while True:
        current = S.product(current, s)
        if current is None:
            return tuple(powers), False
        if current in seen:
            return tuple(powers), True
        powers.append(current)
        seen.add(current)


def smallest_semigroup(S, s) -> Optional[FrozenSet]:
    """Menor sub-semigrupo finito contendo s, ou None se não cabe no truncamento."""
    powers, closed = generated(S, s)
    if not closed:
        return None
    X = frozenset(powers)
    # É semigrupo mesmo: X · X ⊆ X
    if not set_product(S, X, X) <= X:
        raise WorkbenchError("as potências de s não fecharam sob o produto")
    return X


def is_torsion(S, s) -> bool:
    return smallest_semigroup(S, s) is not None


def star_property(S, s, X: Iterable) -> bool:
    """
        Propriedade (*): s ∈ X, s não é de torção e existe x ∈ X com
        X ∩ x·X = ∅ e s·(X \\ {x}) ⊆ X.

        Produto que escapa do truncamento conta como "fora de X".
    """
    X = frozenset(X)
    if not X or s not in X or is_torsion(S, s):
        return False
    for x in X:
        hits = (S.product(x, y) for y in X)
        if any(p is not None and p in X for p in hits):
            continue
        if all(S.product(s, y) in X for y in X - {x}):
            return True
    return False


def _star_closure(S, s, t, top, cap: int) -> Optional[FrozenSet]:
    """Menor X com s, t, top ∈ X e s·(X \\ {top}) ⊆ X. None se escapa ou passa do cap."""
    order = [t, s, top]
    X = set(order)
    queue = list(dict.fromkeys(order))
    while queue:
        y = queue.pop(0)
        if y == top:
            continue
        p = S.product(s, y)
        if p is None:
            return None
        if p not in X:
            X.add(p)
            if len(X) > cap:
                return None
            queue.append(p)
    return frozenset(X)


def in_generated(S, s, t, cap: int = DEFAULT_CAP) -> Checked:
    """
        Avalia a definição de t ∈ s^N: t está no menor semigrupo finito contendo s,
        ou existe X ∈ W(S) com t ∈ X e a propriedade (*) para (s, X).

        O X testemunha é procurado entre os fechos mínimos: se algum X serve com topo x,
        o menor conjunto contendo s, t, x e fechado por s· fora de x também serve.
        Os topos candidatos são t e depois os elementos do universo truncado, em ordem.

        Args:
            S: Semigrupo (finito ou truncado).
            s: Gerador.
            t: Elemento procurado.
            cap (int): Tamanho máximo do X testemunha.

        Returns:
            Checked: Valor, margem (exact / sound-only) e testemunha + resposta do oráculo.
    """
    powers, closed = generated(S, s)
    oracle = t in powers
    if closed:
        return Checked(t in powers, Margin.EXACT, {"semigroup": sorted(powers, key=str), "oracle": oracle})

    candidates = [t] + [x for x in S.universe if x != t]
    for top in candidates:
        X = _star_closure(S, s, t, top, cap)
        if X is not None and star_property(S, s, X):
            return Checked(True, Margin.EXACT, {"X": sorted(X, key=str), "oracle": oracle})
    # Sem testemunha: se o oráculo diz sim, foi o cap/limite que cortou
    margin = Margin.SOUND_ONLY if oracle else Margin.EXACT
    if oracle:
        logger.debug("t=%s ∈ %s^N sem testemunha dentro do cap %d", t, s, cap)
    return Checked(False, margin, {"oracle": oracle})


@lru_cache(maxsize=None)
def divides(k: int, n: int) -> bool:
    """k | n lido como "n está no semigrupo aditivo gerado por k"."""
    S = TruncatedNatSemigroup(max(k, n))
    return in_generated(S, k, n, cap=S.bound).value


# ---------------------------------------------------------------------------
# Multiplicação a partir de (N, +, |)
# ---------------------------------------------------------------------------

@dataclass
class MultiplicationTrace:
    x: int
    y: int
    bound: int
    stages: List[Tuple[str, int]] = field(default_factory=list)
    result: Optional[int] = None


def nat_leq(S: TruncatedNatSemigroup, a: int, b: int) -> bool:
    # a ≤ b  sse  a = b ou existe d com a + d = b
    return a == b or any(S.product(a, d) == b for d in S.universe)


def lcm_via_divides(S: TruncatedNatSemigroup, a: int, b: int,
                    divides_fn: Callable[[int, int], bool] = divides) -> int:
    """O ≤-menor múltiplo comum de a e b dentro do truncamento."""
    least = None
    for m in S.universe:
        if divides_fn(a, m) and divides_fn(b, m):
            if least is None or nat_leq(S, m, least):
                least = m
    if least is None:
        raise TruncationError(f"nenhum múltiplo comum de {a} e {b} cabe em {{1..{S.bound}}}")
    return least


def subtract(S: TruncatedNatSemigroup, a: int, b: int) -> int:
    """O z com z + b = a."""
    for z in S.universe:
        if S.product(z, b) == a:
            return z
    raise WorkbenchError(f"{a} - {b} não está em N")


def halve(S: TruncatedNatSemigroup, a: int) -> int:
    for h in S.universe:
        if S.product(h, h) == a:
            return h
    raise WorkbenchError(f"{a} não é par")


def square_via_lcm(S: TruncatedNatSemigroup, x: int, divides_fn=divides) -> int:
    # x² = mmc(x, x+1) - x
    successor = S.product(x, 1)
    if successor is None:
        raise TruncationError(f"{x}+1 escapa do truncamento", required=x + 1)
    return subtract(S, lcm_via_divides(S, x, successor, divides_fn), x)


def required_bound(x: int, y: int) -> int:
    # Só para a mensagem de erro: mmc(x+y, x+y+1) é o maior intermediário
    return (x + y) * (x + y + 1)


def multiplication_pipeline(x: int, y: int, bound: Optional[int] = None,
                            divides_fn: Callable[[int, int], bool] = divides) -> MultiplicationTrace:
    """
        x·y = ((x+y)² - x² - y²) / 2 com z² = mmc(z, z+1) - z, tudo por +, | e busca.

        Raises:
            TruncationError: O limite não comporta os intermediários (informa o mínimo).
    """
    if x < 1 or y < 1:
        raise WorkbenchError("os fatores precisam ser naturais ≥ 1")
    needed = required_bound(x, y)
    bound = needed if bound is None else bound
    if bound < needed:
        raise TruncationError(f"limite {bound} pequeno para {x}·{y}", required=needed)
    S = TruncatedNatSemigroup(bound)
    trace = MultiplicationTrace(x=x, y=y, bound=bound)
    total = S.product(x, y)
    trace.stages.append(("x+y", total))
    sq_total = square_via_lcm(S, total, divides_fn)
    trace.stages.append(("(x+y)^2", sq_total))
    sq_x = square_via_lcm(S, x, divides_fn)
    trace.stages.append(("x^2", sq_x))
    sq_y = square_via_lcm(S, y, divides_fn)
    trace.stages.append(("y^2", sq_y))
    twice = subtract(S, subtract(S, sq_total, sq_x), sq_y)
    trace.stages.append(("2xy", twice))
    trace.result = halve(S, twice)
    trace.stages.append(("xy", trace.result))
    return trace


def multiply_from_plus_divides(x: int, y: int, bound: Optional[int] = None,
                               divides_fn: Callable[[int, int], bool] = divides) -> int:
    return multiplication_pipeline(x, y, bound, divides_fn).result


def brute_force_lcm(a: int, b: int, bound: int) -> Optional[int]:
    """mmc pela definição, direto sobre os inteiros (oráculo)."""
    for m in range(1, bound + 1):
        if m % a == 0 and m % b == 0:
            return m
    return None


# ---------------------------------------------------------------------------
# Mesmo tamanho e soma nas classes
# ---------------------------------------------------------------------------

def disjoint_equal_size(a: Iterable, b: Iterable) -> bool:
    """O E primitivo: disjuntos e do mesmo tamanho."""
    a, b = frozenset(a), frozenset(b)
    return a.isdisjoint(b) and len(a) == len(b)


def equal_size_E(a: Iterable, b: Iterable) -> bool:
    """Mesmo tamanho sem exigir disjunção: E(a \\ b, b \\ a)."""
    a, b = frozenset(a), frozenset(b)
    return disjoint_equal_size(a - b, b - a)


def _subsets_of_size(base: Sequence, size: int):
    for combo in itertools.combinations(base, size):
        yield frozenset(combo)


def addition_on_classes(a: Iterable, b: Iterable, c: Iterable, base: Sequence) -> Checked:
    """
        |a| + |b| = |c| pela fórmula: existem a', b', c' com E(a, a'), E(b, b'), E(c, c'),
        a' ∩ b' = ∅ e a' ∪ b' = c', com as testemunhas dentro de `base`.
    """
    a, b, c = frozenset(a), frozenset(b), frozenset(c)
    base = tuple(base)
    if len(a) + len(b) > len(base) or len(c) > len(base):
        return Checked.excluded(f"testemunhas disjuntas não cabem numa base de {len(base)} pontos")
    # c' percorre os representantes de [c] (um basta, todos têm o mesmo tamanho);
    # a' ⊆ c' e b' = c' \ a'
    c_rep = next(rep for rep in _subsets_of_size(base, len(c)) if equal_size_E(c, rep))
    for a_size in range(len(c_rep) + 1):
        for a_rep in _subsets_of_size(sorted(c_rep, key=base.index), a_size):
            b_rep = c_rep - a_rep
            if equal_size_E(a, a_rep) and equal_size_E(b, b_rep):
                return Checked(True, Margin.EXACT, {
                    "a'": sorted(a_rep, key=base.index),
                    "b'": sorted(b_rep, key=base.index),
                    "c'": sorted(c_rep, key=base.index),
                })
    return Checked(False, Margin.EXACT)


# ---------------------------------------------------------------------------
# W(M) truncado como estrutura de primeira ordem
# ---------------------------------------------------------------------------

def set_label(elements: Iterable, order: Sequence) -> str:
    position = {x: i for i, x in enumerate(order)}
    return "{" + ",".join(str(x) for x in sorted(elements, key=position.__getitem__)) + "}"


class WeakPowerUniverse:
    """
        Truncamento de W(M): todos os subconjuntos da base com no máximo `cap` elementos,
        ordenados por inclusão, com as relações da base levadas para os átomos.
    """

    def __init__(self, base: FiniteStructure, cap: int = DEFAULT_CAP,
                 with_equal_size: bool = False, semigroup=None):
        self.base = base
        self.cap = cap
        order = base.universe
        self.sets: Dict[str, FrozenSet[str]] = {}
        for size in range(min(cap, len(order)) + 1):
            for combo in itertools.combinations(order, size):
                self.sets[set_label(combo, order)] = frozenset(combo)
        self.ids: Dict[FrozenSet[str], str] = {v: k for k, v in self.sets.items()}

        relations: Dict[str, Relation] = {}
        relations["leq"] = Relation(2, frozenset(
            (x, y) for x, X in self.sets.items() for y, Y in self.sets.items() if X <= Y
        ))
        atoms = {x: self.ids[frozenset((x,))] for x in order}
        relations["atom"] = Relation(1, frozenset((label,) for label in atoms.values()))
        for name, rel in base.relations.items():
            relations[name] = Relation(rel.arity, frozenset(
                tuple(atoms[x] for x in tup) for tup in rel.tuples
            ))
        if with_equal_size:
            relations["E"] = Relation(2, frozenset(
                (x, y) for x, X in self.sets.items() for y, Y in self.sets.items()
                if disjoint_equal_size(X, Y)
            ))
        if semigroup is not None:
            triples = set()
            for x, X in self.sets.items():
                for y, Y in self.sets.items():
                    try:
                        Z = set_product(semigroup, X, Y)
                    except TruncationError:
                        continue
                    if Z in self.ids:
                        triples.add((x, y, self.ids[Z]))
            relations["prod"] = Relation(3, frozenset(triples))
        self.structure = FiniteStructure(universe=tuple(self.sets), relations=relations)
        logger.debug("W(M) truncado: %d elementos, cap %d", len(self.sets), cap)

    def label(self, elements: Iterable) -> str:
        return self.ids[frozenset(elements)]

    def members(self, label: str) -> FrozenSet[str]:
        return self.sets[label]

    def atom(self, x: str) -> str:
        return self.ids[frozenset((x,))]


# ---------------------------------------------------------------------------
# Famílias que definem sequências finitas de inteiros
# ---------------------------------------------------------------------------

@dataclass
class SequenceReport:
    spec: Tuple[int, ...]
    realized: bool
    witness: Optional[Tuple[Tuple, Tuple]] = None
    spectrum: Tuple[int, ...] = ()
    rows_examined: int = 0
    finite_spectra: bool = True


def size_spectrum(S: Callable[[FrozenSet, FrozenSet, FrozenSet], bool], b: FrozenSet, c: FrozenSet,
                  base: Sequence) -> FrozenSet[int]:
    """{|a| : S(a, b, c)}, com a percorrendo um representante por classe de tamanho."""
    base = tuple(base)
    return frozenset(n for n in range(len(base) + 1) if S(frozenset(base[:n]), b, c))


def constructive_row(spec: Sequence[int], base: Sequence) -> Optional[Tuple[FrozenSet, FrozenSet]]:
    # Um ponto de b, depois n pontos de c, depois o próximo ponto de b, ...
    needed = 1 + sum(n + 1 for n in spec)
    if needed > len(base):
        return None
    points = list(base)
    b, c = [points[0]], []
    cursor = 1
    for n in spec:
        c.extend(points[cursor:cursor + n])
        cursor += n
        b.append(points[cursor])
        cursor += 1
    return frozenset(b), frozenset(c)


def sequence_family_check(S: Callable[[FrozenSet, FrozenSet, FrozenSet], bool], spec: Sequence[int],
                          base: Optional[Sequence] = None, exhaustive_limit: int = 6) -> SequenceReport:
    """
        Confere as duas condições de "define sequências finitas de inteiros" para S(a, b, c):
        (a) cada linha (b, c) dá um conjunto finito de tamanhos e (b) o multiconjunto `spec`
        é realizado por alguma linha encontrada por busca.

        A busca tenta primeiro a linha construtiva e depois, em bases com no máximo
        `exhaustive_limit` pontos, todas as linhas.
    """
    spec = tuple(spec)
    if base is None:
        base = tuple(range(1, 2 + sum(n + 1 for n in spec)))
    base = tuple(base)
    target = frozenset(spec)
    report = SequenceReport(spec=spec, realized=False)

    rows: List[Tuple[FrozenSet, FrozenSet]] = []
    constructive = constructive_row(spec, base)
    if constructive is not None:
        rows.append(constructive)

    def all_rows():
        for b_size in range(len(base) + 1):
            for b in itertools.combinations(base, b_size):
                for c_size in range(len(base) + 1):
                    for c in itertools.combinations(base, c_size):
                        yield frozenset(b), frozenset(c)

    candidates = itertools.chain(rows, all_rows() if len(base) <= exhaustive_limit else ())
    for b, c in candidates:
        report.rows_examined += 1
        spectrum = size_spectrum(S, b, c, base)
        # (a) é automática no truncamento: o espectro é subconjunto de {0..|base|}
        report.finite_spectra &= spectrum <= frozenset(range(len(base) + 1))
        if spectrum == target:
            report.realized = True
            report.witness = (tuple(sorted(b, key=base.index)), tuple(sorted(c, key=base.index)))
            report.spectrum = tuple(sorted(spectrum))
            break
    return report
