# Suíte do reticulado de intervalos: leis de reticulado, codificação A_{E,F,G}, a fórmula
# I(x), a relação S, a interpretação de L em W(T, B) e a aritmética definível.
import itertools
from fractions import Fraction
from typing import Iterator, Sequence

from models import intervalos as L
from models import monadico
from models.estrutura import evaluate
from models.interpretacao import interpret_structure, is_isomorphic, translate
from verificacao.base import SuiteRun

ENCODING_GRID = 12
ENCODING_COMPONENTS = 4
AFG_GRID = 5
ARITH_LIMIT = 5


def canonical_sets(points: Sequence[Fraction], max_components: int) -> Iterator[L.IntervalSet]:
    """Todos os conjuntos canônicos não vazios com extremos em `points`."""
    n = len(points)

    def extend(start: int, pieces):
        if pieces:
            yield L.IntervalSet(tuple(pieces))
        if len(pieces) == max_components:
            return
        for i in range(start, n):
            for j in range(i, n):
                yield from extend(j + 1, pieces + [(points[i], points[j])])

    yield from extend(0, [])


def random_interval_set(rng, points: Sequence[Fraction]) -> L.IntervalSet:
    pieces = []
    for _ in range(rng.randint(0, 3)):
        a, b = sorted(rng.sample(points, 2)) if rng.random() < 0.7 else [rng.choice(points)] * 2
        pieces.append((a, b))
    return L.IntervalSet.of(*pieces)


def _lattice_laws(suite: SuiteRun) -> None:
    rng = suite.rng
    points = [Fraction(k, 2) for k in range(0, 2 * suite.params.grid + 1)]
    for _ in range(suite.params.fuzz):
        A, B, C = (random_interval_set(rng, points) for _ in range(3))
        inputs = f"A={A} B={B} C={C}"
        j, m = L.join, L.meet
        suite.case("associatividade", inputs,
                   j(j(A, B), C) == j(A, j(B, C)) and m(m(A, B), C) == m(A, m(B, C)))
        suite.case("comutatividade", inputs, j(A, B) == j(B, A) and m(A, B) == m(B, A))
        suite.case("idempotência", inputs, j(A, A) == A and m(A, A) == A)
        suite.case("absorção", inputs, j(A, m(A, B)) == A and m(A, j(A, B)) == A)
        suite.case("distributividade", inputs,
                   m(A, j(B, C)) == j(m(A, B), m(A, C)) and j(A, m(B, C)) == m(j(A, B), j(A, C)))
        suite.case("A ≤ B sse A ∧ B = A", inputs, L.leq(A, B) == (m(A, B) == A))


def _encoding(suite: SuiteRun) -> None:
    rng = suite.rng
    points = L.grid_points(ENCODING_GRID)
    for U in canonical_sets(points, ENCODING_COMPONENTS):
        triple = L.decode_afg(U)
        suite.case("encode(decode(U)) = U", U, L.encode_afg(triple.E, triple.F, triple.G) == U)
    for _ in range(suite.params.fuzz):
        E, F, G = (frozenset(p for p in points if rng.random() < 0.3) for _ in range(3))
        encoded = L.encode_afg(E, F, G)
        inputs = f"E={L.IntervalSet.points(E)} F={L.IntervalSet.points(F)} G={L.IntervalSet.points(G)}"
        if encoded.is_empty:
            suite.case("decode(encode(E,F,G)) recodifica igual", inputs, True)
            continue
        again = L.decode_afg(encoded)
        suite.case("decode(encode(E,F,G)) recodifica igual", inputs,
                   L.encode_afg(again.E, again.F, again.G) == encoded)

    # ∼ pela igualdade das codificações, extensionalmente numa grade de 3 pontos
    small = L.grid_points(3)
    subsets = [frozenset(c) for size in range(4) for c in itertools.combinations(small, size)]
    triples = list(itertools.product(subsets, repeat=3))
    classes = {}
    for t in triples:
        classes.setdefault(L.encode_afg(*t), []).append(t)
    for U, members in sorted(classes.items(), key=lambda item: item[0].to_text()):
        first = members[0]
        suite.case("∼ é equivalência", U,
                   all(L.encode_afg(*t) == L.encode_afg(*first) for t in members))


def _formula_I(suite: SuiteRun) -> None:
    for n in range(1, suite.params.grid + 1):
        lattice = L.CellLattice(L.grid_points(n))
        for mask in lattice.elements():
            A = lattice.to_interval_set(mask)
            report = L.check_I(A, lattice.grid)
            suite.case("I(x) = um intervalo não degenerado", f"grade={n} {A}", report.agree)
            suite.case("is_finite_element", f"grade={n} {A}",
                       L.is_finite_element(A) == all(a == b for a, b in A.components))
            suite.case("conexo pelo reticulado", f"grade={n} {A}",
                       lattice.is_connected(mask) == L.is_connected(A))
            if n <= 5:
                suite.case("I(x) é local", f"grade={n} {A}", L.check_I_local(A, lattice.grid))
    points = L.grid_points(5)
    for u, v, w in itertools.product(points, repeat=3):
        suite.case("entremeio dos átomos", f"{L.fmt(u)} {L.fmt(v)} {L.fmt(w)}",
                   L.atom_between_lattice(u, v, w) == L.atom_between(u, v, w))


def _sequences(suite: SuiteRun) -> None:
    for k in range(1, 4):
        for spec in itertools.combinations_with_replacement(range(5), k):
            report = monadico.sequence_family_check(L.relation_S, spec)
            inputs = f"{{{', '.join(map(str, spec))}}}"
            suite.case("S realiza o multiconjunto", inputs, report.realized)
            suite.case("espectros finitos", inputs, report.finite_spectra)


def _interpretations(suite: SuiteRun) -> None:
    grid = L.grid_points(AFG_GRID)
    host = L.afg_host(grid)
    suite.guarded("L ≅ interpretação em W(T, B)", f"grade={AFG_GRID}",
                  lambda: is_isomorphic(interpret_structure(host.structure, L.afg_interpretation()),
                                        L.interval_poset_over_grid(grid)))

    bundle = L.arithmetic_interpretation()
    for m, n, k in ((2, 3, 5), (2, 3, 4), (0, 4, 4), (1, 1, 2)):
        sentence = translate(bundle.interpretation, L.plus_sentence(m, n, k))
        suite.guarded("plus traduzido", f"{m}+{n}={k}",
                      lambda: evaluate(bundle.host.structure, sentence) == (m + n == k))

    for k in range(1, 2 * ARITH_LIMIT + 1):
        for t in range(1, 2 * ARITH_LIMIT + 1):
            suite.guarded("| por busca em S", f"{k} | {t}",
                          lambda: L.lattice_divides_checked(k, t).value == monadico.divides(k, t))

    for m in range(ARITH_LIMIT + 1):
        for n in range(ARITH_LIMIT + 1):
            suite.guarded("soma definível", f"{m}+{n}", lambda: L.lattice_add(m, n).matches)
            suite.guarded("produto definível", f"{m}·{n}", lambda: L.lattice_mul(m, n).matches)


def run(suite: SuiteRun) -> None:
    _lattice_laws(suite)
    _encoding(suite)
    _formula_I(suite)
    _sequences(suite)
    _interpretations(suite)
