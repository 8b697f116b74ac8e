# Infraestrutura comum das suítes: parâmetros, registro de casos e montagem do relatório.
import logging
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from core.config import DEFAULT_BOUND, DEFAULT_CAP, DEFAULT_FUZZ, DEFAULT_GRID, DEFAULT_SEED
from core.excecoes import WorkbenchError
from models.margens import Checked, Margin
from schemas.schemas import CasoSchema, ResumoSchema, SuiteReport

logger = logging.getLogger(__name__)

VERDICTS = {
    Margin.EXACT: "exact-pass",
    Margin.SOUND_ONLY: "sound-only-pass",
    Margin.BOUNDARY_EXCLUDED: "boundary-excluded",
}


@dataclass(frozen=True)
class Parameters:
    grid: int = DEFAULT_GRID
    bound: int = DEFAULT_BOUND
    cap: int = DEFAULT_CAP
    fuzz: int = DEFAULT_FUZZ
    seed: int = DEFAULT_SEED

    def as_dict(self) -> Dict[str, int]:
        return {"grid": self.grid, "bound": self.bound, "cap": self.cap, "fuzz": self.fuzz, "seed": self.seed}


class SuiteRun:
    """Acumula os vereditos de uma suíte, na ordem dos casos."""

    def __init__(self, name: str, params: Parameters):
        self.name = name
        self.params = params
        self.rng = random.Random(params.seed)
        self.cases: List[CasoSchema] = []

    def case(self, check: str, inputs, ok, margin: Margin = Margin.EXACT) -> bool:
        """
            Registra um caso. `ok` pode ser bool ou Checked; erros do domínio dentro de uma
            checagem viram falha com a mensagem nos inputs.
        """
        if isinstance(ok, Checked):
            margin = ok.margin
            ok = bool(ok.value)
        if margin is Margin.BOUNDARY_EXCLUDED:
            verdict = "boundary-excluded"
        else:
            verdict = VERDICTS[margin] if ok else "fail"
        self.cases.append(CasoSchema(index=len(self.cases), check=check, inputs=str(inputs), verdict=verdict))
        if verdict == "fail":
            logger.debug("%s: falha em %s (%s)", self.name, check, inputs)
        return verdict != "fail"

    def guarded(self, check: str, inputs, thunk: Callable[[], object]) -> bool:
        try:
            return self.case(check, inputs, thunk())
        except WorkbenchError as erro:
            return self.case(check, f"{inputs} -> {type(erro).__name__}: {erro}", False)

    def report(self, wall_time: Optional[float] = None) -> SuiteReport:
        summary = ResumoSchema()
        for c in self.cases:
            if c.verdict == "exact-pass":
                summary.exact += 1
            elif c.verdict == "sound-only-pass":
                summary.sound_only += 1
            elif c.verdict == "boundary-excluded":
                summary.boundary_excluded += 1
            else:
                summary.fail += 1
        return SuiteReport(
            suite=self.name,
            parameters=self.params.as_dict(),
            case_count=len(self.cases),
            cases=self.cases,
            summary=summary,
            wall_time=wall_time,
        )


@dataclass(frozen=True)
class Suite:
    name: str
    module: str
    properties: Tuple[str, ...]
    body: Callable[[SuiteRun], None] = field(compare=False)

    def run(self, params: Parameters) -> SuiteReport:
        started = time.perf_counter()
        run = SuiteRun(self.name, params)
        self.body(run)
        report = run.report(wall_time=time.perf_counter() - started)
        logger.info("suíte %s: %d casos, %d falhas", self.name, report.case_count, report.summary.fail)
        return report
