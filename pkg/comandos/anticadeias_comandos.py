import click

from comandos import sair, tratar_erros
from core.config import DEFAULT_CAP
from dependencies import carregar_anticadeia
from models import anticadeias as T

# Grupo dos comandos sobre anticadeias de T × T
anticadeias_grupo = click.Group(name="antichains", help="Anticadeias finitas de T × T com T = {1..m}.")


def _ponto(texto: str) -> T.GridPoint:
    partes = texto.strip().strip("()").split(",")
    if len(partes) != 2:
        raise click.BadParameter(f"ponto inválido: {texto!r} (use a,b)")
    try:
        return T.GridPoint(int(partes[0]), int(partes[1]))
    except ValueError:
        raise click.BadParameter(f"ponto inválido: {texto!r}") from None


@anticadeias_grupo.command(name="line")
@click.argument("p")
@click.argument("q")
@click.option("-m", "m", default=3, show_default=True, type=click.IntRange(min=1))
@tratar_erros
def reta(p: str, q: str, m: int):
    """ℓ(P, Q) na grade m × m."""
    pontos = sorted(T.line_of(_ponto(p), _ponto(q), m))
    click.echo(" ".join(str(r) for r in pontos))


@anticadeias_grupo.command(name="equal-size")
@click.argument("a", type=click.Path(dir_okay=False))
@click.argument("b", type=click.Path(dir_okay=False))
@click.option("-o", "o", required=True, metavar="a,b")
@click.option("-p", "p", required=True, metavar="a,b")
@click.option("-q", "q", required=True, metavar="a,b")
@click.option("-m", "m", default=3, show_default=True, type=click.IntRange(min=1))
@click.option("--cap", default=DEFAULT_CAP, show_default=True, type=click.IntRange(min=1))
@tratar_erros
def mesmo_tamanho(a: str, b: str, o: str, p: str, q: str, m: int, cap: int):
    """Procura G, H_A, H_B para as anticadeias dos arquivos A e B; sai com 0 se achar."""
    A, B = carregar_anticadeia(a), carregar_anticadeia(b)
    testemunha = T.equal_size_search(A, B, _ponto(o), _ponto(p), _ponto(q), m, cap)
    if testemunha is None:
        click.echo("false")
    else:
        click.echo("true")
        click.echo(f"  G = {testemunha.G}")
        click.echo(f"  H_A = {testemunha.H_A}")
        click.echo(f"  H_B = {testemunha.H_B}")
    sair(testemunha is not None)
