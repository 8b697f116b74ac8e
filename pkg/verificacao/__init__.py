# Registro das suítes: cada uma cobre as propriedades de um módulo de models/.
from typing import Dict

from core.excecoes import WorkbenchError
from verificacao import anticadeias, arvores, convexos, formulas, geometria, intervalos, plano, semigrupos
from verificacao.base import Parameters, Suite, SuiteRun

SUITES: Dict[str, Suite] = {s.name: s for s in (
    Suite("formula", "models.formula / models.interpretacao", (
        "impressão e leitura são inversas",
        "tradução correta para interpretações de dimensão 1 e 2, com domínio e quociente",
        "∃ é monótona e ∀ antítona sob extensão do universo",
    ), formulas.run),
    Suite("semigroup", "models.monadico", (
        "t ∈ s^N correto e completo dentro do cap",
        "multiplicação a partir de (N, +, |) e mmc(x, x+1)",
        "E(a, b) sse |a| = |b|, e E é equivalência",
        "(*) só vale nas progressões e a soma nas classes confere",
    ), semigrupos.run),
    Suite("intervals", "models.intervalos", (
        "leis de reticulado distributivo",
        "codificação A_{E,F,G} inversa da decodificação",
        "I(x) reconhece os intervalos não degenerados",
        "S realiza os multiconjuntos de tamanhos",
        "L interpretado em W(T, B) e aritmética definível",
    ), intervalos.run),
    Suite("trees", "models.arvore", (
        "ordem horizontal linear",
        "densa e sem extremos",
        "ordem de prefixo definível",
    ), arvores.run),
    Suite("geometry", "models.incidencia", (
        "+ e · por régua e paralelas = aritmética das coordenadas",
        "configurações degeneradas rejeitadas",
        "τ preserva incidência",
        "ordem do corpo lida do entremeio",
    ), geometria.run),
    Suite("convex", "models.convexos", (
        "fecho idempotente, monótono e extensivo",
        "caracterizações definíveis = verificadores diretos no universo padrão",
        "fecho convexo, pontos extremos e famílias finitas em ℓ",
    ), convexos.run),
    Suite("plane", "models.contagem_plano", (
        "completude construtiva do roteamento",
        "casamento de componentes ⟹ |A| = |B|",
        "interseção de segmentos exata",
    ), plano.run),
    Suite("antichains", "models.anticadeias", (
        "leis de ordem das anticadeias",
        "bijeção com pares de subconjuntos do mesmo tamanho",
        "segmentos, retas e projeções",
        "G, H_A, H_B ⟺ projeções do mesmo tamanho",
    ), anticadeias.run),
)}


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise WorkbenchError(f"suíte desconhecida: {name!r} (disponíveis: {', '.join(SUITES)})") from None


__all__ = ["SUITES", "Parameters", "Suite", "SuiteRun", "get_suite"]
