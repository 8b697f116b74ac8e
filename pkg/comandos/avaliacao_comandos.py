from typing import Dict, Optional, Tuple

import click

from comandos import sair, tratar_erros
from core.excecoes import InputFormatError
from dependencies import carregar_estrutura
from models.estrutura import define_set, evaluate
from models.formula import free_vars, parse_formula, to_text


def _atribuicao(pares: Tuple[str, ...]) -> Dict[str, str]:
    asg = {}
    for par in pares:
        var, sep, valor = par.partition("=")
        if not sep or not var.strip():
            raise InputFormatError(f"atribuição inválida: {par!r} (use x=a)")
        asg[var.strip()] = valor.strip()
    return asg


@click.command(name="eval")
@click.argument("estrutura", type=click.Path(dir_okay=False))
@click.argument("formula")
@click.option("--assign", "-a", "atribuicoes", multiple=True, metavar="x=a",
              help="Valor de uma variável livre; pode repetir.")
@click.option("--define", "variaveis", default=None, metavar="x,y",
              help="Imprime o conjunto definido nessas variáveis em vez de um valor de verdade.")
@tratar_erros
def avaliar(estrutura: str, formula: str, atribuicoes: Tuple[str, ...], variaveis: Optional[str]):
    """
        Avalia FORMULA na estrutura finita do arquivo ESTRUTURA.

        Sem --define imprime "true" ou "false" e sai com 0 ou 1. Com --define imprime as
        tuplas do conjunto definido, uma por linha, e sai com 0.
    """
    S = carregar_estrutura(estrutura)
    phi = parse_formula(formula)
    if variaveis is not None:
        nomes = [v.strip() for v in variaveis.split(",") if v.strip()]
        tuplas = sorted(define_set(S, phi, nomes))
        click.echo(f"{{{', '.join(nomes)} : {to_text(phi)}}}")
        for tupla in tuplas:
            click.echo(" ".join(tupla))
        sair(True)
    asg = _atribuicao(atribuicoes)
    # variáveis atribuídas que não aparecem livres são ignoradas
    asg = {v: x for v, x in asg.items() if v in free_vars(phi)}
    valor = evaluate(S, phi, asg)
    click.echo("true" if valor else "false")
    sair(valor)
