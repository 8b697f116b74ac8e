# Aritmética sintética do corpo por régua e paralelas sobre Q², e a correspondência τ
# entre pontos de k² e subespaços de k³. Tudo em racionais exatos.
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from core.excecoes import GeometryError, InputFormatError
from models.intervalos import as_rational, fmt

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffinePoint:
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "AffinePoint":
        return cls(as_rational(x), as_rational(y))

    @classmethod
    def parse(cls, text: str) -> "AffinePoint":
        """Lê "p/q,r/s"."""
        parts = [p.strip() for p in text.strip().strip("()").split(",")]
        if len(parts) != 2:
            raise InputFormatError(f"ponto inválido: {text!r}")
        return cls.of(*parts)

    def __add__(self, other: "AffinePoint") -> "AffinePoint":
        return AffinePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "AffinePoint") -> "AffinePoint":
        return AffinePoint(self.x - other.x, self.y - other.y)

    def scale(self, t: Fraction) -> "AffinePoint":
        return AffinePoint(self.x * t, self.y * t)

    def __str__(self) -> str:
        return f"({fmt(self.x)},{fmt(self.y)})"


def _normalize(*coefficients: Fraction) -> Tuple[Fraction, ...]:
    # primeiro coeficiente não nulo = 1
    pivot = next((c for c in coefficients if c != 0), None)
    if pivot is None:
        raise GeometryError("coeficientes todos nulos")
    return tuple(c / pivot for c in coefficients)


@dataclass(frozen=True)
class AffineLine:
    """{(x, y) : a·x + b·y = c}, normalizada pelo primeiro coeficiente não nulo de (a, b)."""
    a: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def of(cls, a, b, c) -> "AffineLine":
        a, b, c = as_rational(a), as_rational(b), as_rational(c)
        if a == 0 and b == 0:
            raise GeometryError("reta com a = b = 0")
        pivot = a if a != 0 else b
        return cls(a / pivot, b / pivot, c / pivot)

    def contains(self, P: AffinePoint) -> bool:
        return self.a * P.x + self.b * P.y == self.c

    def is_parallel(self, other: "AffineLine") -> bool:
        return self.a * other.b - self.b * other.a == 0

    def __str__(self) -> str:
        return f"{fmt(self.a)}*x + {fmt(self.b)}*y = {fmt(self.c)}"


@dataclass(frozen=True)
class HomogeneousPoint:
    """Subespaço de dimensão 1 de k³, escalado com a última coordenada não nula = 1."""
    u: Fraction
    v: Fraction
    w: Fraction

    @classmethod
    def of(cls, u, v, w) -> "HomogeneousPoint":
        coords = (as_rational(u), as_rational(v), as_rational(w))
        pivot = next((c for c in reversed(coords) if c != 0), None)
        if pivot is None:
            raise GeometryError("o vetor nulo não gera um subespaço de dimensão 1")
        return cls(*(c / pivot for c in coords))

    @property
    def at_infinity(self) -> bool:
        return self.w == 0

    def __str__(self) -> str:
        return f"[{fmt(self.u)}:{fmt(self.v)}:{fmt(self.w)}]"


@dataclass(frozen=True)
class HomogeneousPlane:
    """Subespaço de dimensão 2 de k³ dado pelo vetor normal (primeira coordenada não nula = 1)."""
    n1: Fraction
    n2: Fraction
    n3: Fraction

    @classmethod
    def of(cls, n1, n2, n3) -> "HomogeneousPlane":
        return cls(*_normalize(as_rational(n1), as_rational(n2), as_rational(n3)))

    def contains(self, p: HomogeneousPoint) -> bool:
        return self.n1 * p.u + self.n2 * p.v + self.n3 * p.w == 0

    @property
    def is_H(self) -> bool:
        # H = k × k × {0}
        return self.n1 == 0 and self.n2 == 0


def tau(P: AffinePoint) -> HomogeneousPoint:
    """(a, b) ↦ (a, b, 1)·k."""
    return HomogeneousPoint.of(P.x, P.y, 1)


def tau_inv(p: HomogeneousPoint) -> AffinePoint:
    if p.at_infinity:
        raise GeometryError(f"{p} está contido em H, não vem de um ponto afim")
    return AffinePoint(p.u / p.w, p.v / p.w)


def tau_line(line: AffineLine) -> HomogeneousPlane:
    """Reta a·x + b·y = c ↦ plano {(u, v, w) : a·u + b·v − c·w = 0}."""
    return HomogeneousPlane.of(line.a, line.b, -line.c)


def tau_line_inv(plane: HomogeneousPlane) -> AffineLine:
    if plane.is_H:
        raise GeometryError("o plano H não corresponde a uma reta afim")
    return AffineLine.of(plane.n1, plane.n2, -plane.n3)


# ---------------------------------------------------------------------------
# Régua e paralelas
# ---------------------------------------------------------------------------

def line_through(P: AffinePoint, Q: AffinePoint) -> AffineLine:
    if P == Q:
        raise GeometryError(f"pontos coincidentes {P}: reta indeterminada")
    a = Q.y - P.y
    b = P.x - Q.x
    return AffineLine.of(a, b, a * P.x + b * P.y)


def intersect(l1: AffineLine, l2: AffineLine) -> AffinePoint:
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        raise GeometryError(f"retas paralelas não se cortam: {l1} e {l2}")
    return AffinePoint((l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det)


def parallel_through(line: AffineLine, P: AffinePoint) -> AffineLine:
    return AffineLine.of(line.a, line.b, line.a * P.x + line.b * P.y)


def collinear(P: AffinePoint, Q: AffinePoint, R: AffinePoint) -> bool:
    return (Q.x - P.x) * (R.y - P.y) - (Q.y - P.y) * (R.x - P.x) == 0


def between(P: AffinePoint, Q: AffinePoint, R: AffinePoint) -> bool:
    """Q no segmento fechado [P, R]."""
    if not collinear(P, Q, R):
        return False
    return (Q.x - P.x) * (Q.x - R.x) + (Q.y - P.y) * (Q.y - R.y) <= 0


@dataclass
class ConstructionTrace:
    """Sequência nomeada de retas e pontos auxiliares de uma construção."""
    steps: List[Tuple[str, str]] = field(default_factory=list)
    result: Optional[AffinePoint] = None

    def add(self, name: str, obj) -> None:
        self.steps.append((name, str(obj)))


def _base_line(O: AffinePoint, *others: AffinePoint) -> Optional[AffineLine]:
    for P in others:
        if P != O:
            return line_through(O, P)
    return None


def add_construct(O: AffinePoint, A: AffinePoint, C: AffinePoint, B: AffinePoint,
                  trace: Optional[ConstructionTrace] = None) -> AffinePoint:
    """
        A + C na reta ℓ = (O, A, C) com origem O, por dois paralelogramos auxiliares
        apoiados em B fora de ℓ.

        Args:
            O (AffinePoint): Origem em ℓ.
            A, C (AffinePoint): Parcelas em ℓ.
            B (AffinePoint): Ponto auxiliar fora de ℓ.

        Raises:
            GeometryError: Pontos não colineares, B em ℓ ou interseção degenerada.

        Returns:
            AffinePoint: O ponto que representa A + C.
    """
    trace = trace if trace is not None else ConstructionTrace()
    ell = _base_line(O, A, C)
    if ell is None:
        trace.result = O
        trace.add("resultado", O)
        return O
    if not (ell.contains(A) and ell.contains(C)):
        raise GeometryError("O, A e C precisam ser colineares")
    if ell.contains(B):
        raise GeometryError(f"o ponto auxiliar {B} está em ℓ")
    trace.add("ℓ", ell)
    ob = line_through(O, B)
    trace.add("OB", ob)
    through_a = parallel_through(ob, A)
    trace.add("paralela a OB por A", through_a)
    through_b = parallel_through(ell, B)
    trace.add("paralela a ℓ por B", through_b)
    D = intersect(through_a, through_b)
    trace.add("D", D)
    bc = line_through(B, C)
    trace.add("BC", bc)
    through_d = parallel_through(bc, D)
    trace.add("paralela a BC por D", through_d)
    result = intersect(through_d, ell)
    trace.add("resultado", result)
    trace.result = result
    return result


def mul_construct(O: AffinePoint, I: AffinePoint, A: AffinePoint, C: AffinePoint, B: AffinePoint,
                  trace: Optional[ConstructionTrace] = None) -> AffinePoint:
    """A · C na reta ℓ = (O, I) com origem O e unidade I, aplicando duas vezes o teorema
    de Tales a partir de B fora de ℓ."""
    trace = trace if trace is not None else ConstructionTrace()
    if O == I:
        raise GeometryError("a unidade I precisa ser diferente da origem O")
    ell = line_through(O, I)
    if not (ell.contains(A) and ell.contains(C)):
        raise GeometryError("O, I, A e C precisam ser colineares")
    if ell.contains(B):
        raise GeometryError(f"o ponto auxiliar {B} está em ℓ")
    trace.add("ℓ", ell)
    if A == O or C == O:
        trace.add("resultado", O)
        trace.result = O
        return O
    ib = line_through(I, B)
    trace.add("IB", ib)
    through_a = parallel_through(ib, A)
    trace.add("paralela a IB por A", through_a)
    ob = line_through(O, B)
    trace.add("OB", ob)
    D = intersect(through_a, ob)
    trace.add("D", D)
    bc = line_through(B, C)
    trace.add("BC", bc)
    through_d = parallel_through(bc, D)
    trace.add("paralela a BC por D", through_d)
    result = intersect(through_d, ell)
    trace.add("resultado", result)
    trace.result = result
    return result


# ---------------------------------------------------------------------------
# Oráculo por coordenadas e ordem lida do entremeio
# ---------------------------------------------------------------------------

def coordinate(O: AffinePoint, I: AffinePoint, P: AffinePoint) -> Fraction:
    """t com P = O + t·(I − O)."""
    d = I - O
    if not collinear(O, I, P):
        raise GeometryError(f"{P} fora da reta OI")
    return (P.x - O.x) / d.x if d.x != 0 else (P.y - O.y) / d.y


def point_at(O: AffinePoint, I: AffinePoint, t) -> AffinePoint:
    return O + (I - O).scale(as_rational(t))


def _positive(O: AffinePoint, I: AffinePoint, P: AffinePoint) -> bool:
    # P do lado de I: O não está entre P e I
    return P != O and not between(P, O, I)


def field_less(O: AffinePoint, I: AffinePoint, A: AffinePoint, C: AffinePoint) -> bool:
    """A < C na reta OI, lida só do entremeio depois de declarar O < I."""
    if A == C:
        return False
    pos_a, pos_c = _positive(O, I, A), _positive(O, I, C)
    neg_a = A != O and not pos_a
    neg_c = C != O and not pos_c
    if pos_a and pos_c:
        return between(O, A, C)
    if neg_a and neg_c:
        return between(A, C, O)
    if neg_a:
        return True
    if A == O:
        return pos_c
    return False
