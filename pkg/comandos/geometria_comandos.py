import click

from comandos import sair, tratar_erros
from dependencies import arcos_para_json, carregar_arcos, carregar_pares, carregar_pontos
from models import contagem_plano
from models import convexos as K
from models.incidencia import AffineLine, AffinePoint, ConstructionTrace, add_construct, mul_construct

# Grupo dos comandos sobre pontos de Q²: convexos, projeções e contagem por arcos
pontos_grupo = click.Group(name="points", help="Convexos, projeções e contagem no plano Q².")


def _reta(texto: str) -> AffineLine:
    """Lê "a,b,c" como a reta a·x + b·y = c."""
    partes = [p.strip() for p in texto.split(",")]
    if len(partes) != 3:
        raise click.BadParameter(f"reta inválida: {texto!r} (use a,b,c)")
    return AffineLine.of(*partes)


@pontos_grupo.command(name="hull")
@click.argument("arquivo", type=click.Path(dir_okay=False))
@tratar_erros
def fecho_convexo(arquivo: str):
    """Vértices do fecho convexo dos pontos do ARQUIVO, em sentido anti-horário."""
    politopo = K.hull(carregar_pontos(arquivo))
    for vertice in politopo.points():
        click.echo(str(vertice))


@pontos_grupo.command(name="closure")
@click.argument("poliedro")
@tratar_erros
def fecho(poliedro: str):
    """Fecho topológico de POLIEDRO ("x > 0; y >= 0; x + y < 2")."""
    C = K.ConvexPolyhedron.parse(poliedro)
    click.echo(K.closure(C).to_text() if not C.is_empty else "vazio")
    click.echo(f"fechado: {'sim' if K.is_closed(C) else 'não'}  limitado: {'sim' if K.is_bounded(C) else 'não'}  "
               f"segmento: {'sim' if K.is_segment(C) else 'não'}  reta: {'sim' if K.is_line(C) else 'não'}  "
               f"subespaço afim: {'sim' if K.is_affine_subspace(C) else 'não'}")


@pontos_grupo.command(name="project")
@click.argument("poliedro")
@click.option("--along", "ao_longo", required=True, metavar="a,b,c", help="Reta A que dá a direção.")
@click.option("--onto", "sobre", required=True, metavar="a,b,c", help="Reta ℓ de chegada.")
@tratar_erros
def projetar(poliedro: str, ao_longo: str, sobre: str):
    """Imagem exata de POLIEDRO pela projeção paralela a A sobre ℓ."""
    imagem = K.project(_reta(ao_longo), _reta(sobre), K.ConvexPolyhedron.parse(poliedro))
    click.echo(imagem.canonical().to_text() if not imagem.is_empty else "vazio")


@pontos_grupo.command(name="construct")
@click.argument("op", type=click.Choice(["add", "mul"]))
@click.option("--origin", "-O", "origem", required=True, metavar="x,y")
@click.option("--unit", "-I", "unidade", default=None, metavar="x,y", help="Obrigatório em mul.")
@click.option("--aux", "-B", "auxiliar", required=True, metavar="x,y", help="Ponto fora da reta base.")
@click.argument("a")
@click.argument("c")
@tratar_erros
def construir(op: str, origem: str, unidade, auxiliar: str, a: str, c: str):
    """A + C ou A · C por régua e paralelas, imprimindo as construções intermediárias."""
    O, B = AffinePoint.parse(origem), AffinePoint.parse(auxiliar)
    A, C = AffinePoint.parse(a), AffinePoint.parse(c)
    trace = ConstructionTrace()
    if op == "add":
        resultado = add_construct(O, A, C, B, trace=trace)
    else:
        if unidade is None:
            raise click.UsageError("mul precisa de --unit")
        resultado = mul_construct(O, AffinePoint.parse(unidade), A, C, B, trace=trace)
    for nome, objeto in trace.steps:
        click.echo(f"  {nome}: {objeto}")
    click.echo(str(resultado))


@pontos_grupo.command(name="route")
@click.argument("arquivo", type=click.Path(dir_okay=False))
@tratar_erros
def rotear(arquivo: str):
    """
        Testemunha de |A| = |B| para os conjuntos {"A": [...], "B": [...]} do ARQUIVO.

        Imprime o sistema de arcos em JSON e sai com 0; com tamanhos diferentes sai com 1.
    """
    A, B = carregar_pares(arquivo)
    veredito, sistema = contagem_plano.equal_size_witness(A, B)
    if veredito:
        click.echo(arcos_para_json(sistema))
    else:
        click.echo(f"|A| = {len(A)} e |B| = {len(B)}: sem testemunha")
    sair(veredito)


@pontos_grupo.command(name="match")
@click.argument("arcos", type=click.Path(dir_okay=False))
@click.argument("pares", type=click.Path(dir_okay=False))
@tratar_erros
def casar(arcos: str, pares: str):
    """Confere as condições de casamento de componentes do sistema ARCOS com A e B de PARES."""
    sistema = carregar_arcos(arcos)
    A, B = carregar_pares(pares)
    ok = contagem_plano.matching_conditions(sistema, A, B)
    componentes = contagem_plano.arc_components(sistema.arcs)
    click.echo(f"componentes: {len(componentes)}  |A| = {len(A)}  |B| = {len(B)}")
    click.echo("true" if ok else "false")
    sair(ok)

