# Suíte da contagem no plano: completude construtiva do roteamento, correção das
# condições de casamento em sistemas de arcos adversários e o teste exato de interseção.
from fractions import Fraction

from core.excecoes import GeometryError
from models import contagem_plano as P
from models.incidencia import AffinePoint
from verificacao.base import SuiteRun

GRID = 20
MAX_POINTS = 8


def _show(points) -> str:
    return " ".join(str(p) for p in points)


def random_points(rng, count: int, size: int = GRID):
    cells = rng.sample(range(size * size), count)
    return [AffinePoint(Fraction(c % size), Fraction(c // size)) for c in cells]


def random_arc(rng, spread: int = 4):
    """Poligonal simples sorteada; tentativas que se auto-intersectam são descartadas."""
    while True:
        vertices = tuple(AffinePoint(Fraction(rng.randint(-spread, spread)), Fraction(rng.randint(-spread, spread)))
                         for _ in range(rng.randint(2, 4)))
        try:
            return P.PLArc(vertices)
        except GeometryError:
            continue


def meets_by_parameters(s, t) -> bool:
    """Oráculo independente: resolve p + a·r = q + b·u e confere a, b ∈ [0, 1]."""
    (p, p2), (q, q2) = s, t
    r = (p2.x - p.x, p2.y - p.y)
    u = (q2.x - q.x, q2.y - q.y)
    w = (q.x - p.x, q.y - p.y)
    den = r[0] * u[1] - r[1] * u[0]
    if den != 0:
        a = (w[0] * u[1] - w[1] * u[0]) / den
        b = (w[0] * r[1] - w[1] * r[0]) / den
        return 0 <= a <= 1 and 0 <= b <= 1
    if w[0] * r[1] - w[1] * r[0] != 0:
        return False
    rr = r[0] * r[0] + r[1] * r[1]
    t0 = (w[0] * r[0] + w[1] * r[1]) / rr
    t1 = ((q2.x - p.x) * r[0] + (q2.y - p.y) * r[1]) / rr
    return max(min(t0, t1), Fraction(0)) <= min(max(t0, t1), Fraction(1))


def _completeness(suite: SuiteRun) -> None:
    rng = suite.rng
    for _ in range(suite.params.fuzz):
        k = rng.randint(0, MAX_POINTS // 2)
        points = random_points(rng, 2 * k)
        A, B = points[:k], points[k:]
        inputs = f"A={_show(A)} B={_show(B)}"

        def witnessed():
            verdict, C = P.equal_size_witness(A, B)
            return verdict and P.matching_conditions(C, A, B)

        suite.guarded("|A| = |B| tem testemunha", inputs, witnessed)


def _soundness(suite: SuiteRun) -> None:
    rng = suite.rng
    for _ in range(suite.params.fuzz):
        arcs = [random_arc(rng) for _ in range(rng.randint(1, 4))]
        # pontos de A e B tirados dos extremos dos arcos para que o teste não seja vazio
        ends = list(dict.fromkeys(p for arc in arcs for p in (arc.start, arc.end)))
        rng.shuffle(ends)
        cut = rng.randint(0, len(ends))
        A, B = ends[:cut], ends[cut:]
        if rng.random() < 0.3:
            extra = AffinePoint(Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)))
            if extra not in ends:
                B.append(extra)
        inputs = f"arcos={len(arcs)} A={_show(A)} B={_show(B)}"
        suite.case("casamento ⟹ |A| = |B|", inputs,
                   not P.matching_conditions(arcs, A, B) or len(A) == len(B))

        s, t = rng.choice(arcs).segments()[0], rng.choice(arcs).segments()[-1]
        suite.case("interseção exata", f"{_show(s)} × {_show(t)}",
                   P.segments_intersect(s, t) == meets_by_parameters(s, t))

    # sistemas roteados com um ponto a mais em B
    for _ in range(suite.params.fuzz // 4):
        k = rng.randint(1, MAX_POINTS // 2 - 1)
        points = random_points(rng, 2 * k + 1)
        A, B, extra = points[:k], points[k:2 * k], points[2 * k]
        C = P.route_disjoint_arcs(list(zip(A, B)))
        suite.case("ponto sobrando derruba o casamento", f"A={_show(A)} B={_show(B + [extra])}",
                   not P.matching_conditions(C, A, B + [extra]))


def _examples(suite: SuiteRun) -> None:
    pt = AffinePoint.of
    pairs = [(pt(0, 0), pt(10, 0)), (pt(0, 2), pt(10, 2))]
    suite.guarded("duas paralelas", "(0,0)→(10,0) (0,2)→(10,2)",
                  lambda: len(P.route_disjoint_arcs(pairs).arcs) == 2)
    crossing = [(pt(0, 0), pt(1, 1)), (pt(0, 1), pt(1, 0))]

    def detour():
        system = P.route_disjoint_arcs(crossing)
        return all(arc.start == p and arc.end == q for arc, (p, q) in zip(system.arcs, crossing))

    suite.guarded("configuração cruzada", "(0,0)→(1,1) (0,1)→(1,0)", detour)
    suite.case("|A| = 1, |B| = 2", "", not P.equal_size_E([pt(0, 0)], [pt(1, 0), pt(2, 0)]))
    suite.case("A = B = ∅", "", P.equal_size_E([], []))
    long_arc = P.PLArc((pt(0, 0), pt(2, 0), pt(2, 2)))
    suite.case("componente com dois pontos de A", "",
               not P.matching_conditions([long_arc], [pt(0, 0), pt(2, 0)], [pt(2, 2), pt(5, 5)]))


def run(suite: SuiteRun) -> None:
    _completeness(suite)
    _soundness(suite)
    _examples(suite)
