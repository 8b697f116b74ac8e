# Classificação de uma checagem finita de uma fórmula sobre estrutura infinita.
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional


class Margin(str, Enum):
    # Veredito exato: o truncamento não altera a resposta
    EXACT = "exact"
    # Truncamento pode perder testemunhas, nunca inventar
    SOUND_ONLY = "sound-only"
    # Caso fora da margem declarada, não é nem verdadeiro nem falso
    BOUNDARY_EXCLUDED = "boundary-excluded"


@dataclass(frozen=True)
class Checked:
    value: Optional[bool]
    margin: Margin
    witness: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.value)

    @classmethod
    def excluded(cls, reason: str) -> "Checked":
        return cls(None, Margin.BOUNDARY_EXCLUDED, {"reason": reason})
