# Este arquivo reúne as dependências que os comandos da CLI compartilham: configuração de
# logs, leitura dos arquivos de entrada e escrita dos relatórios.
import json
import logging
from typing import Iterable, List, Tuple

from jinja2 import Environment, FileSystemLoader, StrictUndefined
from pydantic import BaseModel, ValidationError

from core.config import LOG_LEVEL, TEMPLATES_DIR
from core.excecoes import InputFormatError
from models.anticadeias import Antichain
from models.contagem_plano import ArcSystem, PLArc
from models.estrutura import FiniteStructure
from models.incidencia import AffinePoint
from schemas.schemas import (AnticadeiaSchema, EstruturaSchema, PontosSchema, ParesSchema,
                             SistemaArcosSchema, SuiteReport)

logger = logging.getLogger(__name__)


# Configura o logging da aplicação inteira uma única vez
def configurar_logs(level: str = LOG_LEVEL) -> None:
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _ler_json(path: str):
    try:
        with open(path, encoding="utf-8") as arquivo:
            return json.load(arquivo)
    except OSError as erro:
        raise InputFormatError(f"não foi possível ler {path}: {erro.strerror}") from erro
    except json.JSONDecodeError as erro:
        raise InputFormatError(f"{path} não é um JSON válido: {erro.msg} (linha {erro.lineno})") from erro


def _validar(schema: type, data, path: str) -> BaseModel:
    # Arquivos de pontos podem ser só a lista, sem o objeto em volta
    if isinstance(data, list) and "points" in schema.model_fields:
        data = {"points": data}
    try:
        return schema.model_validate(data)
    except ValidationError as erro:
        primeiro = erro.errors()[0]
        local = ".".join(str(p) for p in primeiro["loc"])
        raise InputFormatError(f"{path}: {local}: {primeiro['msg']}") from erro


def carregar_estrutura(path: str) -> FiniteStructure:
    """
        Lê uma estrutura finita do formato JSON
        {"universe": [...], "relations": {nome: {"arity": n, "tuples": [[...]]}}}.

        Raises:
            InputFormatError: Arquivo ilegível ou fora do esquema.

        Returns:
            FiniteStructure: A estrutura validada.
    """
    schema = _validar(EstruturaSchema, _ler_json(path), path)
    return FiniteStructure.build(
        schema.universe,
        {name: (rel.arity, rel.tuples) for name, rel in schema.relations.items()},
    )


def _pontos(pairs: Iterable[Tuple[str, str]]) -> List[AffinePoint]:
    return [AffinePoint.of(x, y) for x, y in pairs]


def carregar_pontos(path: str) -> List[AffinePoint]:
    return _pontos(_validar(PontosSchema, _ler_json(path), path).points)


def carregar_pares(path: str) -> Tuple[List[AffinePoint], List[AffinePoint]]:
    """Arquivo {"A": [...], "B": [...]} com dois conjuntos de pontos racionais."""
    schema = _validar(ParesSchema, _ler_json(path), path)
    return _pontos(schema.A), _pontos(schema.B)


def carregar_arcos(path: str) -> ArcSystem:
    schema = _validar(SistemaArcosSchema, _ler_json(path), path)
    return ArcSystem(tuple(PLArc(tuple(_pontos(arc.vertices))) for arc in schema.arcs))


def carregar_anticadeia(path: str) -> Antichain:
    return Antichain.of(_validar(AnticadeiaSchema, _ler_json(path), path).points)


def arcos_para_json(system: ArcSystem) -> str:
    return SistemaArcosSchema(arcs=[
        {"vertices": [(str(P.x), str(P.y)) for P in arc.vertices]} for arc in system.arcs
    ]).model_dump_json(indent=2)


# Ambiente do Jinja2 com a pasta de templates configurada
templates = Environment(
    loader=FileSystemLoader(TEMPLATES_DIR),
    undefined=StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def renderizar_relatorio(report: SuiteReport, failures_only: bool = True) -> str:
    """Relatório em texto: cabeçalho, casos com falha e o resumo."""
    cases = [c for c in report.cases if c.verdict == "fail"] if failures_only else report.cases
    return templates.get_template("relatorio.txt.j2").render(report=report, cases=cases)


def escrever_relatorio_json(report: SuiteReport, path: str, deterministic: bool = True) -> None:
    exclude = {"wall_time"} if deterministic else None
    try:
        with open(path, "w", encoding="utf-8") as arquivo:
            arquivo.write(report.model_dump_json(indent=2, by_alias=True, exclude=exclude))
            arquivo.write("\n")
    except OSError as erro:
        raise InputFormatError(f"não foi possível escrever {path}: {erro.strerror}") from erro
