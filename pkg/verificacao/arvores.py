# Suíte da árvore binária: a ordem horizontal é linear, densa e sem extremos nas
# profundidades amostradas, e a forma definível da ordem de prefixo confere.
from models import arvore

ORDER_DEPTH = 6
PROBE_DEPTH = 5
WITNESS_DEPTH = 7


def run(suite) -> None:
    nodes = list(arvore.nodes(ORDER_DEPTH))
    holds = {(s, t) for s in nodes for t in nodes if arvore.horizontal(s, t)}
    for s in nodes:
        label = s or "ε"
        suite.case("reflexiva", label, (s, s) in holds)
        suite.case("antissimétrica", label,
                   all(t == s for t in nodes if (s, t) in holds and (t, s) in holds))
        suite.case("total", label, all((s, t) in holds or (t, s) in holds for t in nodes))
        above = [t for t in nodes if (s, t) in holds]
        suite.case("transitiva", label,
                   all((s, r) in holds for t in above for r in nodes if (t, r) in holds))
        suite.case("prefixo definível", label,
                   all(arvore.prefix_leq_definable(s, t) == arvore.prefix_leq(s, t) for t in nodes))

    probe = list(arvore.nodes(PROBE_DEPTH))
    witnesses = list(arvore.nodes(WITNESS_DEPTH))
    strict = arvore.strictly_horizontal
    for s in probe:
        for t in probe:
            if strict(s, t):
                suite.case("densa", f"{s or 'ε'} ≺ {t or 'ε'}",
                           any(strict(s, r) and strict(r, t) for r in witnesses))
        suite.case("sem extremos", s or "ε",
                   any(strict(r, s) for r in witnesses) and any(strict(s, r) for r in witnesses))
