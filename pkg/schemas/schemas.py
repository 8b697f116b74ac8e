# Arquivo de schemas é usado com o Pydantic para definir o formato de cada arquivo de entrada
# e dos relatórios das suítes de verificação.
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from core.config import REPORT_SCHEMA


# Esquema de uma relação dentro do arquivo de estrutura
class RelacaoSchema(BaseModel):
    arity: int = Field(ge=0)
    tuples: List[List[str]]

    @model_validator(mode="after")
    def checar_aridade(self):
        for tup in self.tuples:
            if len(tup) != self.arity:
                raise ValueError(f"tupla {tup} não tem aridade {self.arity}")
        return self


# Estrutura finita: {"universe": [...], "relations": {nome: {"arity": n, "tuples": [...]}}}
class EstruturaSchema(BaseModel):
    universe: List[str] = Field(min_length=1)
    relations: Dict[str, RelacaoSchema] = Field(default_factory=dict)

    @field_validator("universe")
    @classmethod
    def universo_sem_repeticao(cls, universe: List[str]) -> List[str]:
        if len(set(universe)) != len(universe):
            raise ValueError("o universo tem elementos repetidos")
        return universe


# Pontos racionais chegam como strings "p/q" ou números inteiros
class PontosSchema(BaseModel):
    points: List[Tuple[str, str]]


class ParesSchema(BaseModel):
    A: List[Tuple[str, str]]
    B: List[Tuple[str, str]]


class ArcoSchema(BaseModel):
    vertices: List[Tuple[str, str]] = Field(min_length=2)


class SistemaArcosSchema(BaseModel):
    arcs: List[ArcoSchema]


class AnticadeiaSchema(BaseModel):
    points: List[Tuple[int, int]]

    @field_validator("points")
    @classmethod
    def coordenadas_positivas(cls, points: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
        for a, b in points:
            if a < 1 or b < 1:
                raise ValueError(f"coordenadas de T começam em 1: ({a},{b})")
        return points


# Veredito de um caso da suíte
class CasoSchema(BaseModel):
    index: int
    check: str
    inputs: str
    verdict: str


class ResumoSchema(BaseModel):
    exact: int = 0
    sound_only: int = 0
    boundary_excluded: int = 0
    fail: int = 0


# Relatório de uma suíte de verificação
class SuiteReport(BaseModel):
    schema_: str = Field(default=REPORT_SCHEMA, alias="schema")
    suite: str
    parameters: Dict[str, int]
    case_count: int
    cases: List[CasoSchema]
    summary: ResumoSchema
    wall_time: Optional[float] = None

    model_config = {"populate_by_name": True}

    @model_validator(mode="after")
    def contagens_fecham(self):
        s = self.summary
        if s.exact + s.sound_only + s.boundary_excluded + s.fail != self.case_count:
            raise ValueError("as contagens do resumo não somam o número de casos")
        if len(self.cases) != self.case_count:
            raise ValueError("número de casos diferente de case_count")
        return self

    @property
    def passed(self) -> bool:
        return self.summary.fail == 0
