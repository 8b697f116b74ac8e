# Reticulado das anticadeias finitas de T × T (T = {1..m}) com ordem por coordenadas:
# segmentos, retas, projeções, sistemas de coordenadas e "mesmo tamanho" via G, H_A, H_B.
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

from core.config import DEFAULT_CAP
from core.excecoes import AntichainError

logger = logging.getLogger(__name__)


class GridPoint(NamedTuple):
    t1: int
    t2: int

    def __str__(self) -> str:
        return f"({self.t1},{self.t2})"


def point_leq(s: GridPoint, t: GridPoint) -> bool:
    return s[0] <= t[0] and s[1] <= t[1]


def grid(m: int) -> List[GridPoint]:
    return [GridPoint(a, b) for a in range(1, m + 1) for b in range(1, m + 1)]


@dataclass(frozen=True)
class Antichain:
    """Pontos dois a dois incomparáveis, ordenados pela primeira coordenada."""
    points: Tuple[GridPoint, ...]

    def __post_init__(self):
        for s, t in itertools.combinations(self.points, 2):
            if point_leq(s, t) or point_leq(t, s):
                raise AntichainError(f"{s} e {t} são comparáveis")

    @classmethod
    def of(cls, points: Iterable) -> "Antichain":
        return cls(tuple(sorted({GridPoint(*p) for p in points})))

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.points) + "}"

    def __len__(self) -> int:
        return len(self.points)


def maximal(points: Iterable[GridPoint]) -> Antichain:
    pts = set(points)
    return Antichain.of(p for p in pts if not any(p != q and point_leq(p, q) for q in pts))


def antichain_leq(A: Antichain, B: Antichain) -> bool:
    """∀a ∈ A ∃b ∈ B : a ≤ b."""
    return all(any(point_leq(a, b) for b in B.points) for a in A.points)


def join(A: Antichain, B: Antichain) -> Antichain:
    return maximal(A.points + B.points)


def meet(A: Antichain, B: Antichain) -> Antichain:
    return maximal(GridPoint(min(a[0], b[0]), min(a[1], b[1])) for a in A.points for b in B.points)


@lru_cache(maxsize=None)
def all_antichains(m: int, include_empty: bool = False) -> Tuple[Antichain, ...]:
    """Todas as anticadeias de {1..m}²: primeira coordenada crescente, segunda decrescente."""
    result = []
    for size in range(0 if include_empty else 1, m + 1):
        for xs in itertools.combinations(range(1, m + 1), size):
            for ys in itertools.combinations(range(m, 0, -1), size):
                result.append(Antichain.of(zip(xs, ys)))
    return tuple(result)


def join_irreducibles(m: int) -> FrozenSet[Antichain]:
    """Elementos que não são junção de dois estritamente menores (busca exaustiva)."""
    elements = all_antichains(m)
    result = set()
    for x in elements:
        below = [y for y in elements if y != x and antichain_leq(y, x)]
        if not any(join(y, z) == x for y, z in itertools.combinations_with_replacement(below, 2)):
            result.add(x)
    return frozenset(result)


# ---------------------------------------------------------------------------
# Segmentos, retas e projeções
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def interval(p: GridPoint, q: GridPoint, m: int) -> FrozenSet[GridPoint]:
    return frozenset(r for r in grid(m) if point_leq(p, r) and point_leq(r, q))


def defines_line_segment(p: GridPoint, q: GridPoint) -> bool:
    """p ≤ q, p ≠ q e (p₁ = q₁ ou p₂ = q₂)."""
    return p != q and point_leq(p, q) and (p[0] == q[0] or p[1] == q[1])


def defines_line_segment_by_order(p: GridPoint, q: GridPoint, m: int) -> bool:
    """p ≠ q e ≤ restrita a [p, q] (com p, q ∈ [p, q]) é total."""
    box = interval(p, q, m)
    if p == q or p not in box or q not in box:
        return False
    return all(point_leq(a, b) or point_leq(b, a) for a, b in itertools.combinations(box, 2))


def _is_line_segment_set(S: FrozenSet[GridPoint], m: int) -> bool:
    if len(S) < 2:
        return False
    lo = GridPoint(min(p[0] for p in S), min(p[1] for p in S))
    hi = GridPoint(max(p[0] for p in S), max(p[1] for p in S))
    return defines_line_segment(lo, hi) and interval(lo, hi, m) == S


@lru_cache(maxsize=None)
def line_of(p: GridPoint, q: GridPoint, m: int) -> FrozenSet[GridPoint]:
    """
        ℓ(p, q) = {r : [p, r] ∪ [r, p] ∪ [p, q] é um segmento}, com r comparável a p.

        Para r incomparável a p os dois intervalos são vazios e a união se reduz a [p, q].
    """
    if not defines_line_segment(p, q):
        raise AntichainError(f"{p}, {q} não definem um segmento")
    base = interval(p, q, m)
    return frozenset(r for r in grid(m)
                     if (point_leq(p, r) or point_leq(r, p))
                     and _is_line_segment_set(interval(p, r, m) | interval(r, p, m) | base, m))


@lru_cache(maxsize=None)
def project_line(p: GridPoint, q: GridPoint, r: GridPoint, m: int) -> GridPoint:
    """O único s ∈ ℓ(p, q) com (r, s) ou (s, r) definindo segmento; r se r ∈ ℓ(p, q)."""
    line = line_of(p, q, m)
    if r in line:
        return r
    partners = [s for s in line if defines_line_segment(r, s) or defines_line_segment(s, r)]
    if len(partners) != 1:
        raise AntichainError(f"projeção de {r} sobre ℓ({p},{q}) não é única")
    return partners[0]


@lru_cache(maxsize=None)
def project_antichain(p: GridPoint, q: GridPoint, A: Antichain, m: int) -> FrozenSet[GridPoint]:
    return frozenset(project_line(p, q, a, m) for a in A.points)


def is_coordinate_system(o: GridPoint, p: GridPoint, q: GridPoint, m: int) -> bool:
    if not (defines_line_segment(o, p) and defines_line_segment(o, q)):
        return False
    return q not in line_of(o, p, m) and p not in line_of(o, q, m)


# ---------------------------------------------------------------------------
# Mesmo tamanho
# ---------------------------------------------------------------------------

def size_pair(A: Antichain) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """(π₁(A), π₂(A)): dois subconjuntos de T do mesmo tamanho."""
    return frozenset(a[0] for a in A.points), frozenset(a[1] for a in A.points)


def antichain_from_pair(U: Iterable[int], V: Iterable[int]) -> Antichain:
    """Inversa de size_pair: U crescente casado com V decrescente."""
    U, V = sorted(set(U)), sorted(set(V), reverse=True)
    if len(U) != len(V):
        raise AntichainError(f"tamanhos diferentes: {len(U)} e {len(V)}")
    return Antichain.of(zip(U, V))


@lru_cache(maxsize=None)
def _signature_table(o: GridPoint, p: GridPoint, q: GridPoint, m: int, cap: int):
    # (π_{o,p}(H), π_{o,q}(H)) de cada anticadeia candidata H, e o caminho inverso
    candidates = [H for H in all_antichains(m, include_empty=True) if len(H) <= cap]
    signature: Dict[Antichain, Tuple[FrozenSet, FrozenSet]] = {
        H: (project_antichain(o, p, H, m), project_antichain(o, q, H, m)) for H in candidates
    }
    by_signature: Dict[Tuple[FrozenSet, FrozenSet], Antichain] = {}
    for H, sig in signature.items():
        by_signature.setdefault(sig, H)
    return candidates, signature, by_signature


@dataclass(frozen=True)
class EqualSizeWitness:
    G: Antichain
    H_A: Antichain
    H_B: Antichain


def equal_size_search(A: Antichain, B: Antichain, o: GridPoint, p: GridPoint, q: GridPoint, m: int,
                      cap: int = DEFAULT_CAP) -> Optional[EqualSizeWitness]:
    """
        Procura G, H_A, H_B com π_{o,p}(H_A) = π_{o,p}(A), π_{o,p}(H_B) = π_{o,p}(B),
        π_{o,q}(H_A) = π_{o,q}(G) e π_{o,q}(H_B) = π_{o,q}(G).

        A testemunha construtiva (G = H_A = A quando A e B têm o mesmo tamanho, H_B com
        as coordenadas de B e de G) é tentada primeiro; depois a busca é exaustiva nas
        anticadeias com até `cap` pontos.

        Raises:
            AntichainError: o, p, q não formam um sistema de coordenadas.
    """
    if not is_coordinate_system(o, p, q, m):
        raise AntichainError(f"{o}, {p}, {q} não formam um sistema de coordenadas")
    pa, pb = project_antichain(o, p, A, m), project_antichain(o, p, B, m)
    _, signature, by_signature = _signature_table(o, p, q, m, cap)
    qa = signature[A][1] if A in signature else project_antichain(o, q, A, m)
    witness = _attempt(by_signature, A, qa, pa, pb)
    if witness is None:
        witness = _exhaustive(o, p, q, m, cap, pa, pb)
    if witness is None:
        logger.debug("sem testemunha para %s, %s", A, B)
    return witness


def _attempt(by_signature, G: Antichain, qg: FrozenSet[GridPoint], pa, pb) -> Optional[EqualSizeWitness]:
    H_A = by_signature.get((pa, qg))
    H_B = by_signature.get((pb, qg))
    if H_A is not None and H_B is not None:
        return EqualSizeWitness(G, H_A, H_B)
    return None


@lru_cache(maxsize=None)
def _exhaustive(o: GridPoint, p: GridPoint, q: GridPoint, m: int, cap: int,
                pa: FrozenSet[GridPoint], pb: FrozenSet[GridPoint]) -> Optional[EqualSizeWitness]:
    # só depende das projeções de A e B sobre ℓ(o, p)
    candidates, signature, by_signature = _signature_table(o, p, q, m, cap)
    for G in candidates:
        witness = _attempt(by_signature, G, signature[G][1], pa, pb)
        if witness is not None:
            return witness
    return None


def equal_size_interpreted(A: Antichain, B: Antichain, o: GridPoint, p: GridPoint, q: GridPoint, m: int,
                           cap: int = DEFAULT_CAP) -> bool:
    return equal_size_search(A, B, o, p, q, m, cap) is not None


def equal_size_oracle(A: Antichain, B: Antichain, o: GridPoint, p: GridPoint, m: int) -> bool:
    return len(project_antichain(o, p, A, m)) == len(project_antichain(o, p, B, m))


def coordinate_systems(m: int) -> List[Tuple[GridPoint, GridPoint, GridPoint]]:
    points = grid(m)
    return [(o, p, q) for o in points for p in points for q in points if is_coordinate_system(o, p, q, m)]
