# Reticulado L das uniões finitas de intervalos fechados [a, b] com extremos racionais:
# operações de reticulado, a codificação A_{E,F,G}, relação de entremeio, a fórmula I(x),
# saltos, a relação S e a interpretação da aritmética.
import itertools
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from core.excecoes import InputFormatError, TruncationError, WorkbenchError
from models.estrutura import FiniteStructure
from models.formula import (And, Eq, Exists, Forall, Formula, Implies, Not, Or, atom,
                            conj, disj, iff)
from models.interpretacao import Definition, Interpretation
from models import monadico
from models.margens import Checked, Margin

logger = logging.getLogger(__name__)


def as_rational(value) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as erro:
        raise InputFormatError(f"racional inválido: {value!r}") from erro


def fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# IntervalSet
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntervalSet:
    """União finita de intervalos fechados em forma canônica: ordenados, com lacunas estritas."""
    components: Tuple[Tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        for a, b in self.components:
            if a > b:
                raise WorkbenchError(f"intervalo [{fmt(a)},{fmt(b)}] com a > b")
        for (_, b), (a, _) in zip(self.components, self.components[1:]):
            if not b < a:
                raise WorkbenchError("componentes fora da forma canônica")

    @classmethod
    def of(cls, *pairs) -> "IntervalSet":
        """Canonicaliza uma lista qualquer de intervalos [a, b] (junta os que se tocam)."""
        items = sorted((as_rational(a), as_rational(b)) for a, b in pairs)
        merged: List[List[Fraction]] = []
        for a, b in items:
            if a > b:
                raise WorkbenchError(f"intervalo [{fmt(a)},{fmt(b)}] com a > b")
            if merged and a <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        return cls(tuple((a, b) for a, b in merged))

    @classmethod
    def points(cls, values: Iterable) -> "IntervalSet":
        return cls.of(*((v, v) for v in values))

    @classmethod
    def parse(cls, text: str) -> "IntervalSet":
        """Lê o formato "[a,b] [c,d] ..." com racionais "p/q"."""
        text = text.strip()
        if text in ("", "[]", "empty"):
            return cls()
        pieces = re.findall(r"\[\s*([^,\]]+)\s*,\s*([^\]]+)\s*\]", text)
        leftover = re.sub(r"\[\s*([^,\]]+)\s*,\s*([^\]]+)\s*\]", "", text).strip()
        if not pieces or leftover:
            raise InputFormatError(f"conjunto de intervalos inválido: {text!r}")
        return cls.of(*((a.strip(), b.strip()) for a, b in pieces))

    def to_text(self) -> str:
        if not self.components:
            return "[]"
        return " ".join(f"[{fmt(a)},{fmt(b)}]" for a, b in self.components)

    def __str__(self) -> str:
        return self.to_text()

    @property
    def is_empty(self) -> bool:
        return not self.components

    @property
    def is_atom(self) -> bool:
        return len(self.components) == 1 and self.components[0][0] == self.components[0][1]

    def endpoints(self) -> Tuple[Fraction, ...]:
        return tuple(sorted({x for comp in self.components for x in comp}))

    def contains(self, q) -> bool:
        q = as_rational(q)
        return any(a <= q <= b for a, b in self.components)


def join(A: IntervalSet, B: IntervalSet) -> IntervalSet:
    return IntervalSet.of(*(A.components + B.components))


def meet(A: IntervalSet, B: IntervalSet) -> IntervalSet:
    pieces = []
    for a1, b1 in A.components:
        for a2, b2 in B.components:
            lo, hi = max(a1, a2), min(b1, b2)
            if lo <= hi:
                pieces.append((lo, hi))
    return IntervalSet.of(*pieces)


def leq(A: IntervalSet, B: IntervalSet) -> bool:
    return all(any(a2 <= a1 and b1 <= b2 for a2, b2 in B.components) for a1, b1 in A.components)


def components(A: IntervalSet) -> Tuple[IntervalSet, ...]:
    return tuple(IntervalSet((comp,)) for comp in A.components)


def is_connected(A: IntervalSet) -> bool:
    # ⊥ não conta como conexo (convenção)
    return len(A.components) == 1


def is_finite_element(A: IntervalSet) -> bool:
    """A representa um conjunto finito de pontos: toda componente é um átomo."""
    return all(a == b for a, b in A.components)


# ---------------------------------------------------------------------------
# Codificação A_{E,F,G}
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AFGTriple:
    E: FrozenSet[Fraction]
    F: FrozenSet[Fraction]
    G: FrozenSet[Fraction]


def _closed_between(e: Fraction, f: Fraction, points: Iterable[Fraction]) -> Set[Fraction]:
    lo, hi = min(e, f), max(e, f)
    return {p for p in points if lo <= p <= hi}


def encode_afg(E: Iterable, F: Iterable, G: Iterable) -> IntervalSet:
    """União dos [[e, f]] com [[e,f]] ∩ E = {e}, [[e,f]] ∩ F = {f} e [[e,f]] ∩ G = ∅."""
    E = {as_rational(x) for x in E}
    F = {as_rational(x) for x in F}
    G = {as_rational(x) for x in G}
    blocks = []
    for e in E:
        for f in F:
            if (_closed_between(e, f, E) == {e} and _closed_between(e, f, F) == {f}
                    and not _closed_between(e, f, G)):
                blocks.append((min(e, f), max(e, f)))
    return IntervalSet.of(*blocks)


def decode_afg(U: IntervalSet) -> AFGTriple:
    """Tripla canônica: extremos esquerdos, extremos direitos e pontos médios das lacunas."""
    if U.is_empty:
        raise WorkbenchError("decode_afg precisa de um conjunto não vazio")
    E = frozenset(a for a, _ in U.components)
    F = frozenset(b for _, b in U.components)
    G = frozenset((b + a) / 2 for (_, b), (a, _) in zip(U.components, U.components[1:]))
    return AFGTriple(E, F, G)


# ---------------------------------------------------------------------------
# Entremeio
# ---------------------------------------------------------------------------

def atom_between(u, v, w) -> bool:
    """u ∈ [[v, w]] = [min(v,w), max(v,w)]."""
    u, v, w = as_rational(u), as_rational(v), as_rational(w)
    return min(v, w) <= u <= max(v, w)


def betweenness_of_order(order: Sequence) -> FrozenSet[Tuple]:
    """Relação de entremeio de uma ordem total dada pela sequência crescente."""
    position = {x: i for i, x in enumerate(order)}
    return frozenset(
        (x, y, z) for x in order for y in order for z in order
        if position[x] <= position[y] <= position[z] or position[z] <= position[y] <= position[x]
    )


@dataclass
class BetweennessReport:
    bounded: bool
    endpoints: Optional[Tuple] = None
    order: Tuple = ()
    failing_clause: Optional[str] = None
    dense: Optional[bool] = None
    dense_reason: str = "conjunto finito nunca é denso"


def betweenness_axioms(B: Iterable[Tuple], elements: Optional[Iterable] = None) -> BetweennessReport:
    """
        Procura extremos a, b tais que (a) B(a,x,y) e B(x,y,b) definem a mesma ordem
        total com menor elemento a e maior b e (b) B é o entremeio dessa ordem.

        Returns:
            BetweennessReport: ordem recuperada ou a cláusula que falhou.
    """
    B = frozenset(tuple(t) for t in B)
    X = sorted(set(elements) if elements is not None else {x for t in B for x in t}, key=str)
    if not X:
        return BetweennessReport(bounded=False, failing_clause="a")
    failing = "a"
    for a in X:
        for b in X:
            if a == b and len(X) > 1:
                continue
            le = {(x, y) for x in X for y in X if (a, x, y) in B}
            if le != {(x, y) for x in X for y in X if (x, y, b) in B}:
                continue
            # Ordem total com mínimo a e máximo b
            total = all((x, y) in le or (y, x) in le for x in X for y in X)
            antisym = all(not ((x, y) in le and (y, x) in le) or x == y for x in X for y in X)
            if not (total and antisym):
                continue
            if not all((x, z) in le for x, y in le for y2, z in le if y == y2):
                continue
            if not all((a, x) in le and (x, b) in le for x in X):
                continue
            order = tuple(sorted(X, key=lambda x: sum(1 for y in X if (y, x) in le)))
            if betweenness_of_order(order) != B:
                failing = "b"
                continue
            return BetweennessReport(bounded=True, endpoints=(a, b), order=order)
    return BetweennessReport(bounded=False, failing_clause=failing)


# ---------------------------------------------------------------------------
# Reticulado de células: universo limitado fechado por extremos
# ---------------------------------------------------------------------------

class CellLattice:
    """
        Os elementos de L com extremos numa grade finita, como máscaras de bits sobre as
        células da grade (pontos e intervalos abertos entre pontos consecutivos).
        União = OR, interseção = AND; uma máscara é fechada quando cada célula aberta
        vem com os dois pontos vizinhos.
    """

    def __init__(self, grid: Iterable):
        self.grid: Tuple[Fraction, ...] = tuple(sorted({as_rational(x) for x in grid}))
        if not self.grid:
            raise WorkbenchError("grade vazia")
        self.size = len(self.grid)
        self.full = (1 << (2 * self.size - 1)) - 1
        self.index = {p: i for i, p in enumerate(self.grid)}
        self._open = sum(1 << (2 * i + 1) for i in range(self.size - 1))
        self._connected: Dict[int, bool] = {}
        self._atoms: Dict[int, bool] = {}

    def point(self, p) -> int:
        return 1 << (2 * self.index[as_rational(p)])

    def is_closed(self, mask: int) -> bool:
        opened = mask & self._open
        return (opened >> 1) & ~mask == 0 and (opened << 1) & ~mask == 0

    def elements(self) -> List[int]:
        return [m for m in range(self.full + 1) if self.is_closed(m)]

    def down_set(self, mask: int) -> List[int]:
        result = []
        sub = mask
        while True:
            if self.is_closed(sub):
                result.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & mask
        return result

    def atoms_below(self, mask: int) -> List[Fraction]:
        return [p for i, p in enumerate(self.grid) if mask >> (2 * i) & 1]

    def to_interval_set(self, mask: int) -> IntervalSet:
        pieces = []
        i = 0
        while i < self.size:
            if mask >> (2 * i) & 1:
                j = i
                while j + 1 < self.size and mask >> (2 * j + 1) & 1:
                    j += 1
                pieces.append((self.grid[i], self.grid[j]))
                i = j + 1
            else:
                i += 1
        return IntervalSet.of(*pieces)

    def from_interval_set(self, A: IntervalSet) -> int:
        mask = 0
        for a, b in A.components:
            if a not in self.index or b not in self.index:
                raise WorkbenchError(f"extremos de {A} fora da grade")
            i, j = self.index[a], self.index[b]
            for cell in range(2 * i, 2 * j + 1):
                mask |= 1 << cell
        return mask

    @staticmethod
    def leq(a: int, b: int) -> bool:
        return a & ~b == 0

    def is_connected(self, mask: int) -> bool:
        """Definição do reticulado: não nulo e não é união disjunta de dois elementos não nulos."""
        cached = self._connected.get(mask)
        if cached is not None:
            return cached
        verdict = mask != 0
        sub = (mask - 1) & mask
        while verdict and sub:
            rest = mask ^ sub
            if rest and self.is_closed(sub) and self.is_closed(rest):
                verdict = False
            sub = (sub - 1) & mask
        self._connected[mask] = verdict
        return verdict

    def is_atom(self, mask: int) -> bool:
        cached = self._atoms.get(mask)
        if cached is None:
            cached = mask != 0 and all(d in (0, mask) for d in self.down_set(mask))
            self._atoms[mask] = cached
        return cached

    def connected_below(self, mask: int) -> List[int]:
        return [d for d in self.down_set(mask) if self.is_connected(d)]

    def smallest_connected_cover(self, atoms: Iterable, below: Optional[int] = None,
                                 pool: Optional[List[int]] = None) -> Optional[int]:
        """Menor elemento conexo (≤ below, se dado) contendo os átomos; None se não existe."""
        need = 0
        for p in atoms:
            need |= self.point(p)
        if pool is None:
            pool = self.connected_below(self.full if below is None else below)
        covers = [c for c in pool if self.leq(need, c)]
        for c in covers:
            if all(self.leq(c, other) for other in covers):
                return c
        return None


def atom_between_lattice(u, v, w) -> bool:
    """u entre v e w pela definição do reticulado: {u} ≤ menor conexo contendo {v}, {w}."""
    lattice = CellLattice((u, v, w))
    cover = lattice.smallest_connected_cover((v, w))
    return cover is not None and lattice.leq(lattice.point(u), cover)


def is_connected_lattice(A: IntervalSet, grid: Iterable = ()) -> bool:
    lattice = CellLattice(tuple(grid) + A.endpoints() or (0,))
    return lattice.is_connected(lattice.from_interval_set(A))


# ---------------------------------------------------------------------------
# A fórmula I(x)
# ---------------------------------------------------------------------------

@dataclass
class IReport:
    element: str
    semantic: bool
    bounded: bool
    clauses: Dict[str, Optional[bool]] = field(default_factory=dict)
    failing: Optional[str] = None

    @property
    def agree(self) -> bool:
        return self.semantic == self.bounded


def semantic_I(A: IntervalSet) -> bool:
    """Alvo semântico: um único intervalo fechado não degenerado."""
    return len(A.components) == 1 and A.components[0][0] < A.components[0][1]


def _I_clauses(lattice: CellLattice, x: int, clauses: Dict[str, Optional[bool]]) -> Optional[str]:
    # I1: conexo, não átomo
    clauses["I1"] = lattice.is_connected(x) and not lattice.is_atom(x)
    if not clauses["I1"]:
        return "I1"

    # I2: entremeio dos átomos ≤ x pelo menor conexo ≤ x
    atoms = lattice.atoms_below(x)
    pool = lattice.connected_below(x)
    covers = {}
    for v in atoms:
        for w in atoms:
            cover = lattice.smallest_connected_cover((v, w), pool=pool)
            if cover is None:
                clauses["I2"] = False
                return "I2"
            covers[(v, w)] = cover
    B = {(v, u, w) for (v, w), c in covers.items() for u in atoms if lattice.leq(lattice.point(u), c)}
    report = betweenness_axioms(B, atoms)
    clauses["I2"] = report.bounded
    if not report.bounded:
        return "I2"
    # Densidade sobre Q: o ponto médio de dois átomos distintos está em x
    region = lattice.to_interval_set(x)
    clauses["I2-dense"] = all(region.contains((v + w) / 2) for v in atoms for w in atoms if v != w)
    if not clauses["I2-dense"]:
        return "I2-dense"

    # I3: vizinhanças ((v, w)) de u que evitam os átomos de y; nos extremos da ordem a
    # vizinhança é semiaberta
    ends = set(report.endpoints)
    neighbourhoods = []
    for v, w in itertools.combinations(atoms, 2):
        inside = frozenset(u for u in atoms if (v, u, w) in B and u not in (v, w))
        neighbourhoods.append((v, w, inside))
    neighbourhoods.sort(key=lambda item: len(item[2]))
    atom_sets = {frozenset(lattice.atoms_below(y)) for y in lattice.down_set(x)}
    for u in atoms:
        for blocked in atom_sets:
            if u in blocked:
                continue
            found = False
            for v, w, inside in neighbourhoods:
                region_u = inside | ({u} if u in ends and u in (v, w) else frozenset())
                if u in region_u and not (region_u & blocked):
                    found = True
                    break
            if not found:
                clauses["I3"] = False
                return "I3"
    clauses["I3"] = True
    return None


def check_I(A: IntervalSet, grid: Iterable = ()) -> IReport:
    """
        Verifica I(x) em A: veredito semântico (um intervalo [a, b] com a < b) e checagem
        das cláusulas I1-I3 no reticulado de células da grade (acrescida dos extremos de A).
        A densidade de I2 é checada simbolicamente sobre Q.
    """
    points = tuple(grid) + A.endpoints()
    lattice = CellLattice(points or (0,))
    clauses: Dict[str, Optional[bool]] = {}
    failing = _I_clauses(lattice, lattice.from_interval_set(A), clauses)
    return IReport(element=A.to_text(), semantic=semantic_I(A), bounded=failing is None,
                   clauses=clauses, failing=failing)


def check_I_local(A: IntervalSet, grid: Iterable = ()) -> bool:
    """I(x) só depende do que está abaixo de x: o veredito com a grade cortada ao fecho
    convexo de A é o mesmo da grade inteira."""
    full = check_I(A, grid)
    if A.is_empty:
        return not full.bounded
    lo, hi = A.components[0][0], A.components[-1][1]
    local = check_I(A, [p for p in map(as_rational, grid) if lo <= p <= hi])
    return full.bounded == local.bounded


# ---------------------------------------------------------------------------
# Saltos e a relação S
# ---------------------------------------------------------------------------

def jumps(b: Iterable) -> Tuple[Tuple[Fraction, Fraction], ...]:
    points = sorted({as_rational(x) for x in b})
    return tuple(zip(points, points[1:]))


def open_between(x, y, points: Iterable) -> FrozenSet[Fraction]:
    """((x, y)) ∩ points."""
    lo, hi = min(x, y), max(x, y)
    return frozenset(p for p in map(as_rational, points) if lo < p < hi)


def relation_S(a: Iterable, b: Iterable, c: Iterable) -> bool:
    """S(a, b, c): algum salto (x, y) de b tem |((x, y)) ∩ c| = |a|."""
    a = frozenset(as_rational(x) for x in a)
    c = frozenset(as_rational(x) for x in c)
    return any(monadico.equal_size_E(open_between(x, y, c), a) for x, y in jumps(b))


def spectrum_S(b: Iterable, c: Iterable) -> FrozenSet[int]:
    """{|a| : S(a, b, c)}: os tamanhos de ((x, y)) ∩ c nos saltos de b."""
    c = frozenset(as_rational(x) for x in c)
    return frozenset(len(open_between(x, y, c)) for x, y in jumps(b))


# ---------------------------------------------------------------------------
# Poset L sobre uma grade finita e a interpretação de L em W(T, B)
# ---------------------------------------------------------------------------

def grid_points(size: int) -> Tuple[Fraction, ...]:
    return tuple(Fraction(i) for i in range(size))


def base_order_structure(grid: Iterable) -> FiniteStructure:
    """(T, B) sobre a grade: B(x, y, z) sse y está entre x e z."""
    points = tuple(sorted({as_rational(x) for x in grid}))
    labels = [fmt(p) for p in points]
    return FiniteStructure.build(labels, {"B": (3, betweenness_of_order(labels))})


def runs_of(points: Sequence[Fraction], chosen: FrozenSet[Fraction]) -> IntervalSet:
    """Intervalos formados pelas sequências de pontos consecutivos escolhidos."""
    pieces, start, previous = [], None, None
    for p in points:
        if p in chosen:
            if start is None:
                start = p
            previous = p
        elif start is not None:
            pieces.append((start, previous))
            start = None
    if start is not None:
        pieces.append((start, previous))
    return IntervalSet.of(*pieces)


def interval_poset_over_grid(grid: Iterable) -> FiniteStructure:
    """Construção direta: elementos de L com extremos na grade e toda lacuna contendo
    um ponto da grade, ordenados por inclusão."""
    points = tuple(sorted({as_rational(x) for x in grid}))
    elements = {}
    for size in range(len(points) + 1):
        for chosen in itertools.combinations(points, size):
            A = runs_of(points, frozenset(chosen))
            elements[A.to_text()] = A
    pairs = [(x, y) for x, A in elements.items() for y, B in elements.items() if leq(A, B)]
    return FiniteStructure.build(elements, {"leq": (2, pairs)})


def _nb(w: str, z: str, u: str) -> Formula:
    # w é vizinho de z: átomo distinto sem átomo estritamente entre os dois
    return conj(atom("atom", w), Not(Eq(w, z)),
                Forall(u, Implies(atom("atom", u),
                                  Implies(atom("B", w, u, z), Or(Eq(u, w), Eq(u, z))))))


def _block_ok(e: str, f: str, E: str, F: str, G: str, w: str) -> Formula:
    # [[e,f]] ∩ E = {e}, [[e,f]] ∩ F = {f}, [[e,f]] ∩ G = ∅
    return conj(
        Forall(w, Implies(atom("atom", w), Implies(And(atom("leq", w, E), atom("B", e, w, f)), Eq(w, e)))),
        Forall(w, Implies(atom("atom", w), Implies(And(atom("leq", w, F), atom("B", e, w, f)), Eq(w, f)))),
        Forall(w, Implies(atom("atom", w), Not(And(atom("leq", w, G), atom("B", e, w, f))))),
    )


def afg_member(z: str, E: str, F: str, G: str) -> Formula:
    """z ∈ A_{E,F,G} como fórmula de W(T, B)."""
    return Exists("e", conj(
        atom("leq", "e", E), atom("atom", "e"),
        Exists("f", conj(atom("leq", "f", F), atom("atom", "f"), atom("B", "e", z, "f"),
                         _block_ok("e", "f", E, F, G, "w"))),
    ))


def afg_interpretation() -> Interpretation:
    """
        Interpretação de dimensão 3 de L em W(T, B). O domínio fica nas triplas em que G
        é exatamente o complemento de A_{E,F,G} e E, F só usam pontas das sequências;
        aí G determina o elemento, a equivalência é G = G' e A ⊆ A' sse G' ⊆ G.
    """
    E, F, G = "E", "F", "G"
    not_in_G_when_in = lambda X: Forall("z", Implies(And(atom("leq", "z", X), atom("atom", "z")),
                                                     Not(atom("leq", "z", G))))
    end_point = lambda z: Not(Exists("w1", conj(
        _nb("w1", z, "u1"), Not(atom("leq", "w1", G)),
        Exists("w2", conj(_nb("w2", z, "u2"), Not(Eq("w1", "w2")), Not(atom("leq", "w2", G)))),
    )))
    only_ends = lambda X: Forall("z", Implies(And(atom("leq", "z", X), atom("atom", "z")), end_point("z")))
    domain = conj(
        not_in_G_when_in(E),
        not_in_G_when_in(F),
        Forall("z", Implies(atom("atom", "z"), iff(atom("leq", "z", G), Not(afg_member("z", E, F, G))))),
        only_ends(E),
        only_ends(F),
    )
    equivalence = Forall("z", Implies(atom("atom", "z"), iff(atom("leq", "z", "G1"), atom("leq", "z", "G2"))))
    return Interpretation(
        dimension=3,
        domain=Definition((E, F, G), domain),
        equivalence=Definition(("E1", "F1", "G1", "E2", "F2", "G2"), equivalence),
        relations={"leq": Definition(("E1", "F1", "G1", "E2", "F2", "G2"), atom("leq", "G2", "G1"))},
    )


def afg_host(grid: Iterable) -> monadico.WeakPowerUniverse:
    base = base_order_structure(grid)
    return monadico.WeakPowerUniverse(base, cap=len(base.universe))


# ---------------------------------------------------------------------------
# Aritmética: interpretação em (W(T), E) e as operações pela tubulação definível
# ---------------------------------------------------------------------------

def _exactly(k: int, x: str) -> Formula:
    # x tem exatamente k átomos
    if k == 0:
        return Forall("z0", Implies(atom("leq", "z0", x), Not(atom("atom", "z0"))))
    names = [f"a{i}" for i in range(1, k + 1)]
    body = Forall("z0", Implies(And(atom("leq", "z0", x), atom("atom", "z0")),
                                disj(*(Eq("z0", n) for n in names))))
    # Quantificadores aninhados, cada um guardado por leq(a_i, x)
    for i in reversed(range(k)):
        name = names[i]
        body = Exists(name, conj(atom("leq", name, x), atom("atom", name),
                                 *(Not(Eq(name, prev)) for prev in names[:i]), body))
    return body


def _diff(u: str, x: str, y: str) -> Formula:
    # u = x \ y
    return Forall("t", Implies(atom("atom", "t"),
                               iff(atom("leq", "t", u), And(atom("leq", "t", x), Not(atom("leq", "t", y))))))


def same_size_formula(x: str, y: str) -> Formula:
    """Mesmo tamanho a partir do E disjunto: E(x \\ y, y \\ x)."""
    return Exists("u", conj(atom("leq", "u", x), _diff("u", x, y),
                            Exists("v", conj(atom("leq", "v", y), _diff("v", y, x), atom("E", "u", "v")))))


def plus_formula(x: str, y: str, z: str) -> Formula:
    """Gráfico da soma nas classes: representantes disjuntos cuja união representa z."""
    disjoint = Forall("t", Implies(atom("atom", "t"), Not(And(atom("leq", "t", "ra"), atom("leq", "t", "rb")))))
    union = Forall("t", Implies(atom("atom", "t"),
                                iff(atom("leq", "t", "rc"), Or(atom("leq", "t", "ra"), atom("leq", "t", "rb")))))
    return Exists("rc", conj(
        same_size_formula(z, "rc"),
        Exists("ra", conj(atom("leq", "ra", "rc"), same_size_formula(x, "ra"),
                          Exists("rb", conj(atom("leq", "rb", "rc"), same_size_formula(y, "rb"),
                                            disjoint, union)))),
    ))


@dataclass(frozen=True)
class ArithmeticBundle:
    host: monadico.WeakPowerUniverse
    interpretation: Interpretation
    numerals: int


def arithmetic_interpretation(base_size: int = 5) -> ArithmeticBundle:
    """
        (N0, +) com numerais interpretado em (W(T), E) sobre uma grade de `base_size`
        pontos: domínio = todos os conjuntos finitos, equivalência = mesmo tamanho.
    """
    base = base_order_structure(grid_points(base_size))
    host = monadico.WeakPowerUniverse(base, cap=base_size, with_equal_size=True)
    relations = {"plus": Definition(("x", "y", "z"), plus_formula("x", "y", "z"))}
    for k in range(base_size + 1):
        relations[f"n{k}"] = Definition(("x",), _exactly(k, "x"))
    interpretation = Interpretation(
        dimension=1,
        domain=Definition(("x",), Eq("x", "x")),
        equivalence=Definition(("x", "y"), same_size_formula("x", "y")),
        relations=relations,
    )
    return ArithmeticBundle(host=host, interpretation=interpretation, numerals=base_size)


def plus_sentence(m: int, n: int, k: int) -> Formula:
    """∃x∃y∃z (n_m(x) ∧ n_n(y) ∧ n_k(z) ∧ plus(x, y, z))."""
    return Exists("x", And(atom(f"n{m}", "x"),
                           Exists("y", And(atom(f"n{n}", "y"),
                                           Exists("z", And(atom(f"n{k}", "z"), atom("plus", "x", "y", "z")))))))


@dataclass
class ArithmeticResult:
    op: str
    m: int
    n: int
    value: int
    oracle: int
    stages: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def matches(self) -> bool:
        return self.value == self.oracle


def _atom_set(points: Sequence[Fraction], start: int, size: int) -> FrozenSet[Fraction]:
    return frozenset(points[start:start + size])


def lattice_add(m: int, n: int, grid_size: Optional[int] = None) -> ArithmeticResult:
    """m + n por addition_on_classes, com m e n representados por conjuntos de átomos."""
    if m < 0 or n < 0:
        raise WorkbenchError("operandos precisam ser naturais")
    grid_size = m + n if grid_size is None else grid_size
    if grid_size < m + n:
        raise TruncationError(f"grade de {grid_size} pontos pequena para {m}+{n}", required=m + n)
    points = grid_points(max(grid_size, 1))
    a = _atom_set(points, 0, m)
    b = _atom_set(points, m, n)
    result = ArithmeticResult(op="add", m=m, n=n, value=-1, oracle=m + n)
    result.stages.append(("a", str(IntervalSet.points(a))))
    result.stages.append(("b", str(IntervalSet.points(b))))
    for size in range(len(points) + 1):
        c = _atom_set(points, 0, size)
        checked = monadico.addition_on_classes(a, b, c, points)
        if checked.value:
            result.value = size
            result.stages.append(("c", str(IntervalSet.points(c))))
            result.stages.append(("witness", ", ".join(
                f"{k}={IntervalSet.points(v)}" for k, v in checked.witness.items())))
            return result
    raise TruncationError(f"nenhuma classe soma {m}+{n} na grade", required=m + n)


def lattice_divides_checked(k: int, t: int, grid_size: Optional[int] = None) -> Checked:
    """
        k | t lido na relação S: procura uma linha (b, c) com |c| = t, todo ponto de c dentro
        de um salto de b e S(a, b, c) com |a| = k em todo salto de b.

        c ocupa as posições ímpares 1, 3, ..., 2t-1 da grade e os pontos de b são escolhidos
        entre as posições pares; como S só enxerga a ordem, toda linha com |c| = t tem uma
        cópia nessa forma. A busca estende b salto a salto, aceitando o próximo ponto r só
        quando S(a, {x, r}, c) vale no salto novo. Grades com menos de 2t+1 pontos ficam
        fora da margem.
    """
    if k < 1 or t < 1:
        return Checked(False, Margin.EXACT)
    grid_size = 2 * t + 1 if grid_size is None else grid_size
    if grid_size < 2 * t + 1:
        return Checked.excluded(f"grade de {grid_size} pontos não comporta |c| = {t}")
    points = grid_points(grid_size)
    c = frozenset(points[1:2 * t:2])
    cuts = points[0:2 * t + 1:2]
    a = frozenset(grid_points(k))
    reached = 0
    stack = [(0,)]
    while stack:
        b = stack.pop()
        i = b[-1]
        reached = max(reached, i)
        if i == t:
            row = tuple(cuts[j] for j in b)
            covered = row[0] < min(c) and max(c) < row[-1] and c.isdisjoint(row)
            if covered and monadico.equal_size_E(c, points[:t]):
                return Checked(True, Margin.EXACT, {"b": IntervalSet.points(row), "c": IntervalSet.points(c)})
            continue
        for j in range(i + 1, t + 1):
            # pontos de c entre os cortes i e j
            window = frozenset(points[2 * i + 1:2 * j:2])
            if len(window) > k:
                break
            if relation_S(a, (cuts[i], cuts[j]), window):
                stack.append(b + (j,))
    logger.debug("%d ∤ %d: a busca em S parou no corte %s", k, t, fmt(cuts[reached]))
    return Checked(False, Margin.EXACT, {"reached": cuts[reached]})


@lru_cache(maxsize=None)
def lattice_divides(k: int, t: int) -> bool:
    """Versão booleana de lattice_divides_checked, usada como `|` na tubulação de produto."""
    checked = lattice_divides_checked(k, t)
    if checked.margin is Margin.BOUNDARY_EXCLUDED:
        raise TruncationError(checked.witness["reason"], required=2 * t + 1)
    return bool(checked.value)


def lattice_mul(m: int, n: int, bound: Optional[int] = None) -> ArithmeticResult:
    """m · n pela tubulação (+, |) com a divisibilidade vinda da relação S."""
    if m < 0 or n < 0:
        raise WorkbenchError("operandos precisam ser naturais")
    result = ArithmeticResult(op="mul", m=m, n=n, value=-1, oracle=m * n)
    if m == 0 or n == 0:
        # A classe de ∅ absorve: não há pares para combinar
        result.value = 0
        result.stages.append(("zero", "classe de ∅"))
        return result
    trace = monadico.multiplication_pipeline(m, n, bound=bound, divides_fn=lattice_divides)
    result.value = trace.result
    result.stages.extend((name, str(value)) for name, value in trace.stages)
    return result
