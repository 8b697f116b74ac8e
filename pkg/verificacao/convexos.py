# Suíte do reticulado de convexos: o fecho em poliedros sorteados e, no universo padrão,
# cada caracterização definível contra o verificador semântico direto.
import itertools
from fractions import Fraction

from core.excecoes import GeometryError
from models import convexos as K
from models.incidencia import AffineLine, AffinePoint
from models.margens import Margin
from verificacao.base import SuiteRun

PROJECTION_LINES = (
    K.X_AXIS,
    K.Y_AXIS,
    AffineLine.of(1, -1, 0),
    AffineLine.of(1, 2, 1),
)


def random_constraint(rng) -> K.Constraint:
    a, b = 0, 0
    while a == 0 and b == 0:
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
    return K.Constraint(Fraction(a), Fraction(b), Fraction(rng.randint(-4, 6), rng.randint(1, 2)),
                        rng.random() < 0.4)


def random_polyhedron(rng) -> K.ConvexPolyhedron:
    return K.ConvexPolyhedron.of(random_constraint(rng) for _ in range(rng.randint(0, 4)))


def _closure_laws(suite: SuiteRun) -> None:
    rng = suite.rng
    for _ in range(suite.params.fuzz):
        C = random_polyhedron(rng)
        D = C.meet(K.ConvexPolyhedron.of([random_constraint(rng)]))
        Cb = K.closure(C)
        inputs = f"C=[{C}] D=[{D}]"
        suite.case("fecho idempotente", inputs, K.closure(Cb).same_set(Cb))
        suite.case("fecho monótono", inputs, K.closure(D).leq(Cb))
        suite.case("C ≤ fecho(C)", inputs, C.leq(Cb))
        suite.case("fecho é fechado", inputs, K.is_closed(Cb))


def _characterizations(suite: SuiteRun) -> None:
    grid = K.sample_grid()
    universe = K.universe_of_polyhedra()
    for C in universe:
        inputs = str(C)
        suite.case("I*: segmento", inputs, K.segment_by_betweenness(C, grid) == K.is_segment(C))
        expected = frozenset(p for p in K.candidate_points(C, grid) if K.closure(C).contains(p))
        suite.case("fecho pelos limites", inputs, K.closure_by_limits(C, grid) == expected)
        suite.case("reta por segmentos", inputs, K.line_by_segments(C, grid) == K.is_line(C))
        suite.case("subespaço afim", inputs, K.affine_by_segment_lines(C, grid) == K.is_affine_subspace(C))
        suite.case("limitado pelos eixos", inputs, K.is_bounded(C) == K.is_bounded_oracle(C))
        for A, ell in itertools.permutations(PROJECTION_LINES, 2):
            if A.is_parallel(ell):
                continue
            image = K.project(A, ell, C)
            label = f"{inputs} A={A} ℓ={ell}"
            suite.case("projeção: vazio sse vazio", label, image.is_empty == C.is_empty)
            suite.case("projeção cobre os átomos", label,
                       all(image.contains(K.project_point(A, ell, AffinePoint(*p))) for p in K.atoms_of(C, grid)))
            suite.case("projeção cabe em ℓ", label, image.leq(K.ConvexPolyhedron.from_line(ell)))
        if not C.is_empty and K.is_closed(C) and K.is_bounded_oracle(C):
            P = K.hull(AffinePoint(*v) for v in C._generators()[0])
            suite.case("extremos por segmentos", inputs,
                       K.extremal_by_segments(P, grid) == frozenset(P.vertices))
            suite.case("politopo = fecho convexo dos extremos", inputs, P.to_polyhedron().same_set(C))
        _discreteness(suite, C, grid)


def _discreteness(suite: SuiteRun, C: K.ConvexPolyhedron, grid) -> None:
    # hipótese de que limitado e discreto implica finito, na sombra sobre o eixo x
    shadow = K.project(K.Y_AXIS, K.X_AXIS, C)
    if not K.is_bounded_oracle(shadow):
        return
    atoms = K.atoms_of(shadow, grid)
    dense = any(shadow.contains(((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)) and a != b
                for a, b in itertools.combinations(atoms, 2))
    ok = dense or len(atoms) <= 1
    suite.case("limitado e discreto ⟹ finito", str(shadow), ok, Margin.SOUND_ONLY)


def _hulls(suite: SuiteRun) -> None:
    rng = suite.rng
    for _ in range(suite.params.fuzz):
        points = [AffinePoint(Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)))
                  for _ in range(rng.randint(1, 7))]
        P = K.hull(points)
        inputs = " ".join(str(p) for p in points)
        region = P.to_polyhedron()
        suite.case("fecho contém os pontos", inputs, all(region.contains(p) for p in points))
        suite.case("extremos ⊆ F", inputs, K.extremal_points(P) <= frozenset(points))
        suite.case("extremos = vértices do fecho", inputs,
                   K.extremal_points(K.hull(K.extremal_points(P))) == K.extremal_points(P))

        xs = sorted({Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(rng.randint(1, 5))})
        target = frozenset(AffinePoint(x, Fraction(0)) for x in xs)
        suite.guarded("todo subconjunto finito de ℓ é realizado", " ".join(str(t) for t in sorted(target, key=str)),
                      lambda: K.finite_subset_family(K.X_AXIS, K.Y_AXIS,
                                                     K.witness_for_subset(K.X_AXIS, K.Y_AXIS, target)) == target)


def _examples(suite: SuiteRun) -> None:
    pt = AffinePoint.of
    suite.case("projeção de (2,3)", "A=eixo y ℓ=eixo x",
               K.project_point(K.Y_AXIS, K.X_AXIS, pt(2, 3)) == pt(2, 0))
    square = K.ConvexPolyhedron.parse("x >= 0; x <= 1; y >= 0; y <= 1")
    suite.case("sombra do quadrado", "[0,1]²",
               K.project(K.Y_AXIS, K.X_AXIS, square).same_set(K.ConvexPolyhedron.parse("y = 0; x >= 0; x <= 1")))
    try:
        K.project(K.X_AXIS, K.X_AXIS, square)
        rejected = False
    except GeometryError:
        rejected = True
    suite.case("A = ℓ é rejeitado", "eixo x", rejected)
    hull = K.hull([pt(0, 0), pt(2, 0), pt(1, 1), pt(1, 0)])
    suite.case("fecho convexo", "(0,0) (2,0) (1,1) (1,0)",
               K.extremal_points(hull) == {pt(0, 0), pt(2, 0), pt(1, 1)})
    suite.case("família finita", "hull{(1,1),(3,2)}",
               K.finite_subset_family(K.X_AXIS, K.Y_AXIS, K.hull([pt(1, 1), pt(3, 2)])) == {pt(1, 0), pt(3, 0)})
    open_segment = K.ConvexPolyhedron.parse("x > 0; x < 1; y = 0")
    suite.case("fecho do segmento aberto", str(open_segment),
               K.closure(open_segment).same_set(K.ConvexPolyhedron.parse("x >= 0; x <= 1; y = 0")))
    empty = K.ConvexPolyhedron.parse("x < 0; x > 0")
    suite.case("fecho do vazio", str(empty), K.closure(empty).is_empty)


def run(suite: SuiteRun) -> None:
    _closure_laws(suite)
    _characterizations(suite)
    _hulls(suite)
    _examples(suite)
