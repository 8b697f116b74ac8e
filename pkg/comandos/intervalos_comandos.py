import click

from comandos import sair, tratar_erros
from models import intervalos as L

# Grupo dos comandos sobre o reticulado de intervalos fechados de Q
intervalos_grupo = click.Group(name="intervals", help="Reticulado de uniões finitas de intervalos de Q.")


def _pontos(texto: str):
    return [L.as_rational(p) for p in texto.replace(";", ",").split(",") if p.strip()]


@intervalos_grupo.command(name="decode")
@click.argument("conjunto")
@tratar_erros
def decodificar(conjunto: str):
    """Tripla canônica (E, F, G) de CONJUNTO ("[0,1] [2,3]") e a recodificação."""
    U = L.IntervalSet.parse(conjunto)
    tripla = L.decode_afg(U)
    for nome, pontos in (("E", tripla.E), ("F", tripla.F), ("G", tripla.G)):
        click.echo(f"{nome} = {{{', '.join(L.fmt(p) for p in sorted(pontos))}}}")
    recodificado = L.encode_afg(tripla.E, tripla.F, tripla.G)
    click.echo(f"A_(E,F,G) = {recodificado}")
    sair(recodificado == U)


@intervalos_grupo.command(name="encode")
@click.option("-E", "e", default="", metavar="p,q,...")
@click.option("-F", "f", default="", metavar="p,q,...")
@click.option("-G", "g", default="", metavar="p,q,...")
@tratar_erros
def codificar(e: str, f: str, g: str):
    """A_(E,F,G): a união dos blocos [[e, f]] que não encostam em G."""
    click.echo(str(L.encode_afg(_pontos(e), _pontos(f), _pontos(g))))


@intervalos_grupo.command(name="check-i")
@click.argument("conjunto")
@click.option("--grid", default=0, type=click.IntRange(min=0), help="Pontos 0..n-1 somados à grade.")
@tratar_erros
def checar_I(conjunto: str, grid: int):
    """Avalia I(x) em CONJUNTO: cláusulas no reticulado de células e veredito semântico."""
    relatorio = L.check_I(L.IntervalSet.parse(conjunto), L.grid_points(grid))
    for clausula, valor in relatorio.clauses.items():
        click.echo(f"  {clausula}: {'-' if valor is None else valor}")
    click.echo(f"I(x): {relatorio.bounded}  intervalo não degenerado: {relatorio.semantic}")
    sair(relatorio.agree)
