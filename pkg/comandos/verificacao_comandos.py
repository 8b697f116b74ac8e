from typing import Optional

import click

from comandos import sair, tratar_erros
from core.config import DEFAULT_BOUND, DEFAULT_CAP, DEFAULT_FUZZ, DEFAULT_GRID, DEFAULT_SEED
from core.excecoes import WorkbenchError
from dependencies import escrever_relatorio_json, renderizar_relatorio
from verificacao import SUITES, Parameters, get_suite


def _listar() -> None:
    for suite in SUITES.values():
        click.echo(f"{suite.name}  ({suite.module})")
        for propriedade in suite.properties:
            click.echo(f"  - {propriedade}")


@click.command(name="verify")
@click.argument("suite", required=False)
@click.option("--grid", default=DEFAULT_GRID, show_default=True, type=click.IntRange(min=1),
              help="Tamanho da maior grade de racionais.")
@click.option("--bound", default=DEFAULT_BOUND, show_default=True, type=click.IntRange(min=1),
              help="Limite N do truncamento de (N, +).")
@click.option("--cap", default=DEFAULT_CAP, show_default=True, type=click.IntRange(min=1),
              help="Tamanho máximo dos subconjuntos quantificados.")
@click.option("--fuzz", default=DEFAULT_FUZZ, show_default=True, type=click.IntRange(min=0),
              help="Quantidade de configurações sorteadas.")
@click.option("--seed", default=DEFAULT_SEED, show_default=True, type=int)
@click.option("--json", "json_path", default=None, type=click.Path(dir_okay=False),
              help="Grava o relatório JSON nesse caminho.")
@click.option("--list", "listar", is_flag=True, help="Lista as suítes e as propriedades que cobrem.")
@click.option("--all-cases", is_flag=True, help="Mostra todos os casos, não só as falhas.")
@click.option("--deterministic/--no-deterministic", default=True, show_default=True,
              help="Omite o tempo de execução para o relatório ser idêntico entre execuções.")
@tratar_erros
def verificar(suite: Optional[str], grid: int, bound: int, cap: int, fuzz: int, seed: int,
              json_path: Optional[str], listar: bool, all_cases: bool, deterministic: bool):
    """
        Roda a suíte de verificação SUITE e imprime o relatório.

        Sai com 0 quando nenhum caso falha, 1 quando há falhas e 2 em erro de uso.
    """
    if listar:
        _listar()
        sair(True)
    if suite is None:
        raise WorkbenchError(f"informe a suíte (disponíveis: {', '.join(SUITES)})")
    params = Parameters(grid=grid, bound=bound, cap=cap, fuzz=fuzz, seed=seed)
    report = get_suite(suite).run(params)
    if deterministic:
        report = report.model_copy(update={"wall_time": None})
    click.echo(renderizar_relatorio(report, failures_only=not all_cases), nl=False)
    if json_path:
        escrever_relatorio_json(report, json_path, deterministic=deterministic)
    sair(report.passed)
