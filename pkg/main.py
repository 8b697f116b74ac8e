import click

from comandos.anticadeias_comandos import anticadeias_grupo
from comandos.aritmetica_comandos import aritmetica
from comandos.avaliacao_comandos import avaliar
from comandos.geometria_comandos import pontos_grupo
from comandos.intervalos_comandos import intervalos_grupo
from comandos.verificacao_comandos import verificar
from core.config import LOG_LEVEL
from dependencies import configurar_logs

# Rodar a bancada: python main.py --help


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Logs em nível DEBUG no stderr.")
def cli(verbose: bool):
    """
        Bancada de verificação de interpretações de aritmética em reticulados.

        Avalia fórmulas em estruturas finitas, roda as suítes de verificação de cada
        módulo e reproduz a aritmética pelas tubulações definíveis.
    """
    configurar_logs("DEBUG" if verbose else LOG_LEVEL)


# Adicionando os comandos e grupos da CLI
cli.add_command(avaliar)
cli.add_command(verificar)
cli.add_command(aritmetica)
cli.add_command(pontos_grupo)
cli.add_command(intervalos_grupo)
cli.add_command(anticadeias_grupo)


if __name__ == "__main__":
    cli()
