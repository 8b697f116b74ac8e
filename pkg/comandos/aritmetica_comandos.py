from typing import Optional

import click

from comandos import sair, tratar_erros
from core.excecoes import TruncationError, WorkbenchError
from models import monadico
from models.intervalos import ArithmeticResult, lattice_add, lattice_mul


def aritmetica_monadica(op: str, m: int, n: int, bound: Optional[int] = None) -> ArithmeticResult:
    """
        m + n pela soma nas classes de W(M) sobre uma base finita simples e m · n pela
        tubulação (+, |) com a divisibilidade de (N, +).

        Raises:
            TruncationError: A base ou o limite não comportam a conta (informa o mínimo).
    """
    if m < 0 or n < 0:
        raise WorkbenchError("operandos precisam ser naturais")
    result = ArithmeticResult(op=op, m=m, n=n, value=-1, oracle=m + n if op == "add" else m * n)
    if op == "add":
        size = m + n if bound is None else bound
        if size < m + n:
            raise TruncationError(f"base de {size} elementos pequena para {m}+{n}", required=m + n)
        base = tuple(range(size))
        a, b = frozenset(base[:m]), frozenset(base[m:m + n])
        result.stages.append(("a", monadico.set_label(a, base)))
        result.stages.append(("b", monadico.set_label(b, base)))
        for k in range(size + 1):
            checked = monadico.addition_on_classes(a, b, base[:k], base)
            if checked.value:
                result.value = k
                result.stages.append(("c", monadico.set_label(base[:k], base)))
                return result
        raise TruncationError(f"nenhuma classe soma {m}+{n}", required=m + n)
    if m == 0 or n == 0:
        result.value = 0
        result.stages.append(("zero", "classe de ∅"))
        return result
    trace = monadico.multiplication_pipeline(m, n, bound=bound)
    result.value = trace.result
    result.stages.extend((name, str(value)) for name, value in trace.stages)
    return result


@click.command(name="arith")
@click.argument("op", type=click.Choice(["add", "mul"]))
@click.argument("m", type=click.IntRange(min=0))
@click.argument("n", type=click.IntRange(min=0))
@click.option("--backend", type=click.Choice(["interval", "monadic"]), default="interval", show_default=True)
@click.option("--bound", type=click.IntRange(min=1), default=None,
              help="Truncamento: tamanho da grade (add) ou limite N (mul). Padrão: o mínimo necessário.")
@tratar_erros
def aritmetica(op: str, m: int, n: int, backend: str, bound: Optional[int]):
    """
        Calcula M OP N pela tubulação definível e imprime cada etapa.

        O resultado é conferido com a aritmética nativa; divergência sai com 1.
    """
    if backend == "interval":
        result = lattice_add(m, n, bound) if op == "add" else lattice_mul(m, n, bound)
    else:
        result = aritmetica_monadica(op, m, n, bound)
    for nome, valor in result.stages:
        click.echo(f"  {nome}: {valor}")
    simbolo = "+" if op == "add" else "·"
    click.echo(f"{m} {simbolo} {n} = {result.value}")
    if not result.matches:
        click.echo(f"erro: divergência, a conta nativa dá {result.oracle}", err=True)
    sair(result.matches)
