import json

import pytest
from click.testing import CliRunner

from models.estrutura import FiniteStructure


# Cadeia a < b < c com a ordem Le reflexiva
CADEIA = {
    "universe": ["a", "b", "c"],
    "relations": {
        "Le": {"arity": 2, "tuples": [["a", "a"], ["a", "b"], ["a", "c"], ["b", "b"], ["b", "c"], ["c", "c"]]},
        "P": {"arity": 1, "tuples": [["b"]]},
    },
}


@pytest.fixture
def cadeia() -> FiniteStructure:
    return FiniteStructure.build(
        CADEIA["universe"],
        {name: (rel["arity"], rel["tuples"]) for name, rel in CADEIA["relations"].items()},
    )


@pytest.fixture
def escrever_json(tmp_path):
    """Grava um objeto JSON num arquivo temporário e devolve o caminho."""
    def escrever(nome: str, conteudo) -> str:
        caminho = tmp_path / nome
        caminho.write_text(json.dumps(conteudo), encoding="utf-8")
        return str(caminho)
    return escrever


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()
