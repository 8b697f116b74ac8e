# Contagem no plano Q²: arcos poligonais disjuntos ligando pares de pontos e a
# caracterização de "mesmo tamanho" por casamento de componentes.
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from core.excecoes import GeometryError
from models.incidencia import AffinePoint, between, collinear

logger = logging.getLogger(__name__)

Segment = Tuple[AffinePoint, AffinePoint]


def _orientation(P: AffinePoint, Q: AffinePoint, R: AffinePoint) -> int:
    value = (Q.x - P.x) * (R.y - P.y) - (Q.y - P.y) * (R.x - P.x)
    return (value > 0) - (value < 0)


def segments_intersect(s: Segment, t: Segment) -> bool:
    """Segmentos fechados se tocam (teste exato por orientação)."""
    p1, p2 = s
    q1, q2 = t
    o1, o2 = _orientation(p1, p2, q1), _orientation(p1, p2, q2)
    o3, o4 = _orientation(q1, q2, p1), _orientation(q1, q2, p2)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    return (between(p1, q1, p2) or between(p1, q2, p2)
            or between(q1, p1, q2) or between(q1, p2, q2))


@dataclass(frozen=True)
class PLArc:
    """Poligonal simples: união dos segmentos fechados entre vértices consecutivos."""
    vertices: Tuple[AffinePoint, ...]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise GeometryError("um arco precisa de pelo menos dois vértices")
        for p, q in zip(self.vertices, self.vertices[1:]):
            if p == q:
                raise GeometryError(f"vértices consecutivos repetidos em {p}")
        if not self._is_simple():
            raise GeometryError("a poligonal se auto-intersecta")

    def segments(self) -> List[Segment]:
        return list(zip(self.vertices, self.vertices[1:]))

    def _is_simple(self) -> bool:
        segs = self.segments()
        for i, j in itertools.combinations(range(len(segs)), 2):
            if j == i + 1:
                # vizinhos só podem dividir o vértice comum
                (a, b), (_, c) = segs[i], segs[j]
                if collinear(a, b, c) and not between(a, b, c):
                    return False
                continue
            if segments_intersect(segs[i], segs[j]):
                return False
        return True

    @property
    def start(self) -> AffinePoint:
        return self.vertices[0]

    @property
    def end(self) -> AffinePoint:
        return self.vertices[-1]

    def contains(self, P: AffinePoint) -> bool:
        return any(between(a, P, b) for a, b in self.segments())

    def meets(self, other: "PLArc") -> bool:
        return any(segments_intersect(s, t) for s in self.segments() for t in other.segments())


@dataclass(frozen=True)
class ArcSystem:
    arcs: Tuple[PLArc, ...]

    def __post_init__(self):
        for a, b in itertools.combinations(self.arcs, 2):
            if a.meets(b):
                raise GeometryError(f"arcos de {a.start} e {b.start} se tocam")


# ---------------------------------------------------------------------------
# Roteamento
# ---------------------------------------------------------------------------

def _transversal_direction(points: Sequence[AffinePoint]) -> Tuple[Fraction, Fraction]:
    # d = (1, t) não paralela a nenhuma reta por dois pontos
    for t in itertools.count():
        d = (Fraction(1), Fraction(t))
        betas = {d[0] * P.y - d[1] * P.x for P in points}
        if len(betas) == len(points):
            return d
    raise AssertionError("inalcançável")


def route_disjoint_arcs(pairs: Sequence[Tuple[AffinePoint, AffinePoint]]) -> ArcSystem:
    """
        Liga cada p_i a q_i com arcos dois a dois disjuntos.

        Cada extremo fica numa reta própria de uma família de paralelas de direção d; o
        arco i cruza as retas intermediárias em alturas ordenadas pelo índice i (os de
        índice menor passam abaixo do extremo, os de índice maior acima) e entre duas
        retas vizinhas é um segmento. Em cada faixa as ordens dos dois lados coincidem,
        então os segmentos não se cruzam.

        Raises:
            GeometryError: Extremos repetidos.

        Returns:
            ArcSystem: Sistema verificado de arcos disjuntos.
    """
    endpoints = [P for pair in pairs for P in pair]
    if len(set(endpoints)) != len(endpoints):
        raise GeometryError("os 2k extremos precisam ser distintos")
    if not pairs:
        return ArcSystem(())
    d = _transversal_direction(endpoints)
    n = (-d[1], d[0])
    dd = d[0] * d[0] + d[1] * d[1]

    def coords(P: AffinePoint) -> Tuple[Fraction, Fraction]:
        # P = α·d + β·n
        return (P.x * d[0] + P.y * d[1]) / dd, (P.x * n[0] + P.y * n[1]) / dd

    def point(alpha: Fraction, beta: Fraction) -> AffinePoint:
        return AffinePoint(alpha * d[0] + beta * n[0], alpha * d[1] + beta * n[1])

    owner: Dict[AffinePoint, int] = {}
    for i, (p, q) in enumerate(pairs):
        owner[p] = owner[q] = i
    lines = sorted(endpoints, key=lambda P: coords(P)[1])
    position = {P: k for k, P in enumerate(lines)}

    arcs = []
    for i, (p, q) in enumerate(pairs):
        lo, hi = sorted((position[p], position[q]))
        path = [lines[lo]]
        for k in range(lo + 1, hi):
            alpha, beta = coords(lines[k])
            path.append(point(alpha + (i - owner[lines[k]]), beta))
        path.append(lines[hi])
        if path[0] != p:
            path.reverse()
        arcs.append(PLArc(tuple(path)))
    system = ArcSystem(tuple(arcs))
    logger.debug("roteamento: %d arcos, direção transversal %s", len(arcs), d)
    return system


# ---------------------------------------------------------------------------
# Casamento de componentes
# ---------------------------------------------------------------------------

def arc_components(arcs: Sequence[PLArc]) -> List[Tuple[int, ...]]:
    """Componentes conexas da união: arcos na mesma componente sse se tocam, transitivamente."""
    parent = list(range(len(arcs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(len(arcs)), 2):
        if arcs[i].meets(arcs[j]):
            parent[find(i)] = find(j)
    groups: Dict[int, List[int]] = {}
    for i in range(len(arcs)):
        groups.setdefault(find(i), []).append(i)
    return [tuple(g) for g in groups.values()]


def _bijective(arcs: Sequence[PLArc], comps: List[Tuple[int, ...]], points: FrozenSet[AffinePoint]) -> bool:
    hits = [{P for P in points if any(arcs[i].contains(P) for i in comp)} for comp in comps]
    if any(len(h) != 1 for h in hits):
        return False
    return all(sum(1 for h in hits if P in h) == 1 for P in points)


def matching_conditions(C: Iterable[PLArc], A: Iterable[AffinePoint], B: Iterable[AffinePoint]) -> bool:
    """(a) cada componente de C encontra A num único ponto e cada ponto de A está numa
    única componente; (b) o mesmo para B."""
    arcs = list(C.arcs if isinstance(C, ArcSystem) else C)
    comps = arc_components(arcs)
    return _bijective(arcs, comps, frozenset(A)) and _bijective(arcs, comps, frozenset(B))


def equal_size_witness(A: Iterable[AffinePoint], B: Iterable[AffinePoint]):
    """(veredito, testemunha C ou None)."""
    A, B = sorted(set(A), key=lambda P: (P.x, P.y)), sorted(set(B), key=lambda P: (P.x, P.y))
    if set(A) & set(B):
        raise GeometryError("A e B precisam ser disjuntos")
    if len(A) != len(B):
        return False, None
    system = route_disjoint_arcs(list(zip(A, B)))
    if not matching_conditions(system, A, B):
        raise GeometryError("testemunha construída não satisfaz as condições de casamento")
    return True, system


def equal_size_E(A: Iterable[AffinePoint], B: Iterable[AffinePoint]) -> bool:
    return equal_size_witness(A, B)[0]
