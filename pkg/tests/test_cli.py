import json

from main import cli
from tests.conftest import CADEIA


def test_eval_true_and_false(runner, escrever_json):
    caminho = escrever_json("cadeia.json", CADEIA)
    resultado = runner.invoke(cli, ["eval", caminho, "(exists x (forall y (Le x y)))"])
    assert resultado.exit_code == 0
    assert resultado.stdout.strip() == "true"
    resultado = runner.invoke(cli, ["eval", caminho, "(forall x (P x))"])
    assert resultado.exit_code == 1
    assert resultado.stdout.strip() == "false"


def test_eval_with_assignment_and_define(runner, escrever_json):
    caminho = escrever_json("cadeia.json", CADEIA)
    resultado = runner.invoke(cli, ["eval", caminho, "(Le x b)", "-a", "x=a", "-a", "b=b"])
    assert resultado.exit_code == 0
    resultado = runner.invoke(cli, ["eval", caminho, "(exists y (and (P y) (Le x y)))", "--define", "x"])
    assert resultado.exit_code == 0
    assert resultado.stdout.splitlines()[1:] == ["a", "b"]


def test_eval_errors_exit_with_2(runner, escrever_json):
    caminho = escrever_json("cadeia.json", CADEIA)
    resultado = runner.invoke(cli, ["eval", caminho, "(exists x (P x)"])
    assert resultado.exit_code == 2
    assert "posição" in resultado.stderr
    resultado = runner.invoke(cli, ["eval", caminho, "(Le x b)"])
    assert resultado.exit_code == 2
    resultado = runner.invoke(cli, ["eval", escrever_json("ruim.json", {"universe": []}), "(P x)"])
    assert resultado.exit_code == 2


def test_verify_list(runner):
    resultado = runner.invoke(cli, ["verify", "--list"])
    assert resultado.exit_code == 0
    assert "antichains" in resultado.stdout


def test_verify_unknown_suite(runner):
    resultado = runner.invoke(cli, ["verify", "nada"])
    assert resultado.exit_code == 2
    assert "suíte desconhecida" in resultado.stderr


def test_verify_writes_json_report(runner, tmp_path):
    caminho = tmp_path / "relatorio.json"
    resultado = runner.invoke(cli, ["verify", "trees", "--json", str(caminho)])
    assert resultado.exit_code == 0
    assert "resultado: OK" in resultado.stdout
    dados = json.loads(caminho.read_text(encoding="utf-8"))
    assert dados["schema"] == "workbench-report/1"
    assert dados["suite"] == "trees"
    assert "wall_time" not in dados


def test_verify_is_deterministic(runner):
    argumentos = ["verify", "geometry", "--fuzz", "5", "--seed", "3", "--all-cases"]
    primeiro = runner.invoke(cli, argumentos)
    segundo = runner.invoke(cli, argumentos)
    assert primeiro.exit_code == 0
    assert primeiro.stdout == segundo.stdout


def test_arith(runner):
    resultado = runner.invoke(cli, ["arith", "mul", "2", "3"])
    assert resultado.exit_code == 0
    assert "2 · 3 = 6" in resultado.stdout
    resultado = runner.invoke(cli, ["arith", "add", "0", "5", "--backend", "monadic"])
    assert resultado.exit_code == 0
    assert "0 + 5 = 5" in resultado.stdout


def test_arith_truncation_reports_required_size(runner):
    resultado = runner.invoke(cli, ["arith", "mul", "9", "9", "--bound", "10"])
    assert resultado.exit_code == 2
    assert "342" in resultado.stderr


def test_points_commands(runner, escrever_json):
    resultado = runner.invoke(cli, ["points", "closure", "x > 0; x < 1; y = 0"])
    assert resultado.exit_code == 0
    assert "fechado: não" in resultado.stdout
    resultado = runner.invoke(cli, ["points", "construct", "add", "-O", "0,0", "-B", "0,1", "2,0", "3,0"])
    assert resultado.exit_code == 0
    assert resultado.stdout.splitlines()[-1] == "(5,0)"
    pares = escrever_json("pares.json", {"A": [["0", "0"], ["0", "1"]], "B": [["1", "1"], ["1", "0"]]})
    resultado = runner.invoke(cli, ["points", "route", pares])
    assert resultado.exit_code == 0
    assert len(json.loads(resultado.stdout)["arcs"]) == 2


def test_intervals_and_antichains(runner):
    resultado = runner.invoke(cli, ["intervals", "decode", "[0,1] [2,3]"])
    assert resultado.exit_code == 0
    assert "G = {3/2}" in resultado.stdout
    resultado = runner.invoke(cli, ["antichains", "line", "1,1", "1,3", "-m", "3"])
    assert resultado.exit_code == 0
    assert resultado.stdout.strip() == "(1,1) (1,2) (1,3)"
