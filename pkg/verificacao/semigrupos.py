# Suíte da estrutura monádica fraca: t ∈ s^N contra a divisibilidade, multiplicação a
# partir de (N, +, |), o mesmo tamanho E, a propriedade (*) e a soma nas classes.
import itertools

from models import monadico
from models.margens import Margin
from verificacao.base import SuiteRun


def _subsets(base):
    for size in range(len(base) + 1):
        for combo in itertools.combinations(base, size):
            yield frozenset(combo)


def _show(X) -> str:
    return "{" + ",".join(str(x) for x in sorted(X)) + "}"


def run(suite: SuiteRun) -> None:
    bound, cap = suite.params.bound, suite.params.cap
    S = monadico.TruncatedNatSemigroup(bound)

    # t ∈ s^N: nunca inventa, e acha sempre que a cadeia {s, 2s, ..., t} cabe no cap
    for s in S.universe:
        for t in S.universe:
            checked = monadico.in_generated(S, s, t, cap)
            oracle = t % s == 0
            inputs = f"s={s} t={t}"
            if checked.value and not oracle:
                suite.case("t ∈ s^N correto", inputs, False)
            elif oracle and not checked.value:
                if t // s <= cap:
                    suite.case("t ∈ s^N completo", inputs, False)
                else:
                    suite.case("t ∈ s^N completo", inputs, True, Margin.BOUNDARY_EXCLUDED)
            else:
                suite.case("t ∈ s^N", inputs, True, checked.margin)

    # semigrupos finitos: a resposta vem da órbita fechada e é exata
    for n in range(1, 6):
        G = monadico.FiniteSemigroup.cyclic_group(n)
        for s, t in itertools.product(G.universe, repeat=2):
            powers = {(s * k) % n for k in range(1, n + 1)}
            checked = monadico.in_generated(G, s, t, cap)
            suite.case("t ∈ s^N em Z/n", f"n={n} s={s} t={t}", checked.value == (t in powers))

    # multiplicação
    for x in range(1, bound + 1):
        for y in range(1, bound // x + 1):
            suite.guarded("x·y por (+, |)", f"{x}·{y}",
                          lambda: monadico.multiply_from_plus_divides(x, y) == x * y)
    for x in range(1, 21):
        needed = x * (x + 1)
        T = monadico.TruncatedNatSemigroup(needed)
        suite.guarded("mmc(x, x+1) = x²+x", f"x={x}",
                      lambda: monadico.lcm_via_divides(T, x, x + 1) == monadico.brute_force_lcm(x, x + 1, needed)
                      == needed)

    # mesmo tamanho
    base = tuple(range(1, 5))
    subsets = list(_subsets(base))
    for a, b in itertools.product(subsets, repeat=2):
        suite.case("E(a, b) sse |a| = |b|", f"{_show(a)} {_show(b)}",
                   monadico.equal_size_E(a, b) == (len(a) == len(b)))
    for a in subsets:
        related = [b for b in subsets if monadico.equal_size_E(a, b)]
        equivalence = (monadico.equal_size_E(a, a)
                       and all(monadico.equal_size_E(b, a) for b in related)
                       and all(monadico.equal_size_E(b, c) for b in related for c in related))
        suite.case("E é equivalência", _show(a), equivalence)

    # propriedade (*): só as progressões {s, 2s, ..., ns}
    small = tuple(range(1, 11))
    T = monadico.TruncatedNatSemigroup(len(small))
    for s in (1, 2, 3):
        for X in _subsets(small):
            if monadico.star_property(T, s, X):
                n = len(X)
                suite.case("(*) ⟹ progressão", f"s={s} X={_show(X)}",
                           X == frozenset(s * k for k in range(1, n + 1)))

    # soma nas classes
    for a, b, c in itertools.product(subsets, repeat=3):
        if len(a) > 2 or len(b) > 2:
            continue
        checked = monadico.addition_on_classes(a, b, c, base)
        inputs = f"{_show(a)} + {_show(b)} = {_show(c)}"
        if checked.margin is Margin.BOUNDARY_EXCLUDED:
            suite.case("soma nas classes", inputs, checked)
        else:
            suite.case("soma nas classes", inputs, checked.value == (len(a) + len(b) == len(c)))
