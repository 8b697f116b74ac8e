# Suíte do reticulado de anticadeias: leis de ordem, a bijeção com pares de subconjuntos
# do mesmo tamanho, segmentos, retas, projeções e o "mesmo tamanho" interpretado.
import itertools

from models import anticadeias as T
from verificacao.base import SuiteRun

ORDER_GRID = 3
MAX_GRID = 4
MAX_POINTS = 3


def _subsets(m: int):
    for size in range(1, m + 1):
        yield from (frozenset(c) for c in itertools.combinations(range(1, m + 1), size))


def _order_laws(suite: SuiteRun) -> None:
    elements = T.all_antichains(ORDER_GRID)
    leq = T.antichain_leq
    for A in elements:
        suite.case("reflexiva", A, leq(A, A))
        for B in elements:
            if leq(A, B) and leq(B, A):
                suite.case("antissimétrica", f"{A} {B}", A == B)
            if leq(A, B):
                suite.case("transitiva", f"{A} ≤ {B}",
                           all(leq(A, C) for C in elements if leq(B, C)))
            suite.case("junção é o supremo", f"{A} {B}",
                       leq(A, T.join(A, B)) and leq(B, T.join(A, B)))
            suite.case("encontro é o ínfimo", f"{A} {B}",
                       leq(T.meet(A, B), A) and leq(T.meet(A, B), B))


def _size_pairs(suite: SuiteRun) -> None:
    for m in range(1, ORDER_GRID + 1):
        seen = {}
        for A in T.all_antichains(m):
            pair = T.size_pair(A)
            suite.case("(π₁, π₂) injetiva", f"m={m} {A}", seen.setdefault(pair, A) == A)
            suite.case("mesmo tamanho", f"m={m} {A}", len(pair[0]) == len(pair[1]) == len(A))
        for U in _subsets(m):
            for V in _subsets(m):
                if len(U) == len(V):
                    suite.guarded("(π₁, π₂) sobrejetiva", f"m={m} U={sorted(U)} V={sorted(V)}",
                                  lambda: T.size_pair(T.antichain_from_pair(U, V)) == (U, V))
    rng = suite.rng
    elements = T.all_antichains(MAX_GRID)
    for _ in range(suite.params.fuzz):
        A = rng.choice(elements)
        suite.guarded("par de tamanhos recupera a anticadeia", f"m={MAX_GRID} {A}",
                      lambda: T.antichain_from_pair(*T.size_pair(A)) == A)


def _join_irreducibles(suite: SuiteRun) -> None:
    for m in range(1, ORDER_GRID + 1):
        singletons = frozenset(T.Antichain.of([p]) for p in T.grid(m))
        suite.case("irredutíveis = unitários", f"m={m}", T.join_irreducibles(m) == singletons)


def _lines(suite: SuiteRun) -> None:
    for m in range(2, min(MAX_GRID, suite.params.grid) + 1):
        points = T.grid(m)
        for p, q in itertools.product(points, repeat=2):
            inputs = f"m={m} p={p} q={q}"
            segment = T.defines_line_segment(p, q)
            suite.case("segmento: critério = ordem total", inputs,
                       segment == T.defines_line_segment_by_order(p, q, m))
            if not segment:
                continue
            if p.t1 == q.t1:
                expected = frozenset(r for r in points if r.t1 == p.t1)
                drop = lambda r: T.GridPoint(p.t1, r.t2)
            else:
                expected = frozenset(r for r in points if r.t2 == p.t2)
                drop = lambda r: T.GridPoint(r.t1, p.t2)
            suite.guarded("ℓ(p, q) é linha ou coluna", inputs, lambda: T.line_of(p, q, m) == expected)
            for r in points:
                suite.guarded("projeção ortogonal", f"{inputs} r={r}",
                              lambda: T.project_line(p, q, r, m) == drop(r))


def _equal_size(suite: SuiteRun) -> None:
    cap = max(suite.params.cap, MAX_POINTS)
    for m in range(2, min(MAX_GRID, suite.params.grid) + 1):
        elements = [A for A in T.all_antichains(m) if len(A) <= MAX_POINTS]
        for o, p, q in T.coordinate_systems(m):
            inputs = f"m={m} o={o} p={p} q={q}"
            found = []

            def agrees() -> bool:
                found.extend((A, B) for A, B in itertools.product(elements, repeat=2)
                             if T.equal_size_interpreted(A, B, o, p, q, m, cap)
                             != T.equal_size_oracle(A, B, o, p, m))
                return not found

            # um caso por sistema de coordenadas, mais um por par divergente
            suite.guarded("G, H_A, H_B ⟺ |π(A)| = |π(B)|", f"{inputs} pares={len(elements) ** 2}", agrees)
            for A, B in found:
                suite.case("G, H_A, H_B ⟺ |π(A)| = |π(B)|", f"{inputs} A={A} B={B}", False)


def _examples(suite: SuiteRun) -> None:
    g = T.GridPoint
    A = T.Antichain.of
    suite.case("{(1,1)} ≤ {(2,2)}", "", T.antichain_leq(A([(1, 1)]), A([(2, 2)])))
    suite.case("{(1,3),(3,1)} ≰ {(2,2)}", "", not T.antichain_leq(A([(1, 3), (3, 1)]), A([(2, 2)])))
    suite.case("ℓ((1,1),(1,3))", "m=3", T.line_of(g(1, 1), g(1, 3), 3) == {g(1, 1), g(1, 2), g(1, 3)})
    suite.case("projeção de (3,2)", "m=3", T.project_line(g(1, 1), g(1, 3), g(3, 2), 3) == g(1, 2))
    suite.guarded("ℓ((2,2),(2,3)) é a coluna inteira", "m=3",
                  lambda: T.line_of(g(2, 2), g(2, 3), 3) == {g(2, 1), g(2, 2), g(2, 3)})
    suite.guarded("projeção de (1,2) na coluna do meio", "m=3",
                  lambda: T.project_line(g(2, 2), g(2, 3), g(1, 2), 3) == g(2, 2))
    suite.case("((1,1),(2,2)) não é segmento", "", not T.defines_line_segment(g(1, 1), g(2, 2)))
    suite.case("((2,2),(1,1)) não é segmento", "", not T.defines_line_segment(g(2, 2), g(1, 1)))
    suite.case("sistema de coordenadas", "o=(1,1) p=(3,1) q=(1,3)",
               T.is_coordinate_system(g(1, 1), g(3, 1), g(1, 3), 3))
    suite.case("q ∈ ℓ(o, p)", "o=(1,1) p=(3,1) q=(2,1)",
               not T.is_coordinate_system(g(1, 1), g(3, 1), g(2, 1), 3))
    suite.case("o = p", "o=p=(1,1)", not T.is_coordinate_system(g(1, 1), g(1, 1), g(1, 3), 3))
    suite.case("{(1,1)} ∼ {(2,2)}", "o=(1,1) p=(3,1) q=(1,3)",
               T.equal_size_interpreted(A([(1, 1)]), A([(2, 2)]), g(1, 1), g(3, 1), g(1, 3), 3))
    suite.case("dois contra um", "o=(1,1) p=(3,1) q=(1,3)",
               not T.equal_size_interpreted(A([(1, 2), (2, 1)]), A([(2, 2)]), g(1, 1), g(3, 1), g(1, 3), 3))


def run(suite: SuiteRun) -> None:
    _order_laws(suite)
    _size_pairs(suite)
    _join_irreducibles(suite)
    _lines(suite)
    _equal_size(suite)
    _examples(suite)
