import pytest

from core.config import REPORT_SCHEMA
from core.excecoes import WorkbenchError
from models.margens import Checked, Margin
from verificacao import SUITES, Parameters, SuiteRun, get_suite

PEQUENO = Parameters(grid=3, bound=12, cap=3, fuzz=10, seed=11)


def test_registry_lists_every_module():
    assert set(SUITES) == {"formula", "semigroup", "intervals", "trees", "geometry", "convex", "plane", "antichains"}
    assert all(s.properties for s in SUITES.values())


def test_unknown_suite():
    with pytest.raises(WorkbenchError):
        get_suite("nada")


@pytest.mark.parametrize("nome", ["trees", "geometry"])
def test_suite_passes(nome):
    relatorio = get_suite(nome).run(PEQUENO)
    assert relatorio.passed
    assert relatorio.case_count == len(relatorio.cases) > 0
    resumo = relatorio.summary
    assert resumo.exact + resumo.sound_only + resumo.boundary_excluded + resumo.fail == relatorio.case_count


def test_same_seed_gives_same_report():
    primeiro = get_suite("geometry").run(PEQUENO).model_dump(exclude={"wall_time"})
    segundo = get_suite("geometry").run(PEQUENO).model_dump(exclude={"wall_time"})
    assert primeiro == segundo


def test_report_carries_schema_and_parameters():
    dados = get_suite("trees").run(PEQUENO).model_dump(by_alias=True)
    assert dados["schema"] == REPORT_SCHEMA
    assert dados["parameters"] == PEQUENO.as_dict()


def _quebra():
    raise WorkbenchError("quebrou")


def test_verdicts():
    run = SuiteRun("teste", PEQUENO)
    assert run.case("exato", "", True)
    assert run.case("sólido", "", Checked(True, Margin.SOUND_ONLY))
    assert run.case("fora", "", Checked.excluded("fora da margem"))
    assert not run.case("falha", "", False)
    assert not run.guarded("erro", "x", _quebra)
    relatorio = run.report()
    assert [c.verdict for c in relatorio.cases] == [
        "exact-pass", "sound-only-pass", "boundary-excluded", "fail", "fail",
    ]
    assert "WorkbenchError: quebrou" in relatorio.cases[-1].inputs
    assert not relatorio.passed
