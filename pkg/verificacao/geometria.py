# Suíte da geometria de incidência: as construções por régua e paralelas contra a
# aritmética das coordenadas, o transporte por τ e a ordem lida do entremeio.
from fractions import Fraction

from core.excecoes import GeometryError
from models.incidencia import (AffineLine, AffinePoint, HomogeneousPoint, HomogeneousPlane, add_construct,
                               field_less, mul_construct, point_at, tau, tau_inv, tau_line, tau_line_inv)
from verificacao.base import SuiteRun


def _q(rng, spread: int = 6) -> Fraction:
    return Fraction(rng.randint(-spread, spread), rng.randint(1, 4))


def _nonzero(rng) -> Fraction:
    value = Fraction(0)
    while value == 0:
        value = _q(rng)
    return value


def random_frame(rng):
    """Origem O, unidade I ≠ O e um ponto B fora da reta OI."""
    O = AffinePoint(_q(rng), _q(rng))
    I = O
    while I == O:
        I = AffinePoint(_q(rng), _q(rng))
    d = I - O
    B = O + AffinePoint(-d.y, d.x).scale(_nonzero(rng)) + d.scale(_q(rng))
    return O, I, B


def _rejects(thunk) -> bool:
    try:
        thunk()
    except GeometryError:
        return True
    return False


def _constructions(suite: SuiteRun) -> None:
    rng = suite.rng
    for _ in range(suite.params.fuzz):
        O, I, B = random_frame(rng)
        a, c, e = _q(rng), _q(rng), _q(rng)
        A, C, D = (point_at(O, I, t) for t in (a, c, e))
        inputs = f"O={O} I={I} B={B} a={a} c={c} e={e}"
        add = lambda X, Y: add_construct(O, X, Y, B)
        mul = lambda X, Y: mul_construct(O, I, X, Y, B)
        suite.guarded("A + C pelas coordenadas", inputs, lambda: add(A, C) == point_at(O, I, a + c))
        suite.guarded("A · C pelas coordenadas", inputs, lambda: mul(A, C) == point_at(O, I, a * c))
        suite.guarded("+ comutativa", inputs, lambda: add(A, C) == add(C, A))
        suite.guarded("+ associativa", inputs, lambda: add(add(A, C), D) == add(A, add(C, D)))
        suite.guarded("· distribui sobre +", inputs, lambda: mul(A, add(C, D)) == add(mul(A, C), mul(A, D)))
        suite.guarded("A + O = A", inputs, lambda: add(A, O) == A)
        suite.guarded("A · I = A", inputs, lambda: mul(A, I) == A)
        suite.guarded("A · O = O", inputs, lambda: mul(A, O) == O)

        # configurações degeneradas: erro declarado, nunca resposta errada
        suite.case("B em ℓ é rejeitado", inputs, _rejects(lambda: mul_construct(O, I, A, C, point_at(O, I, e))))
        suite.case("O = I é rejeitado", inputs, _rejects(lambda: mul_construct(O, O, A, C, B)))
        suite.case("parcela fora de ℓ é rejeitada", inputs, _rejects(lambda: mul_construct(O, I, B, C, B)))


def _transport(suite: SuiteRun) -> None:
    rng = suite.rng
    for _ in range(suite.params.fuzz):
        a, b = _q(rng), _q(rng)
        if a == 0 and b == 0:
            a = Fraction(1)
        P = AffinePoint(_q(rng), _q(rng))
        # metade das vezes a reta passa por P
        c = a * P.x + b * P.y if rng.random() < 0.5 else _q(rng)
        line = AffineLine.of(a, b, c)
        inputs = f"P={P} ℓ={line}"
        suite.case("P ∈ ℓ sse τ(P) ⊆ τ(ℓ)", inputs, line.contains(P) == tau_line(line).contains(tau(P)))
        suite.case("τ⁻¹ τ = id", inputs, tau_inv(tau(P)) == P and tau_line_inv(tau_line(line)) == line)

        p = HomogeneousPoint.of(_q(rng), _q(rng), _nonzero(rng))
        n1, n2 = _nonzero(rng), _q(rng)
        # metade das vezes o plano contém p
        n3 = -(n1 * p.u + n2 * p.v) / p.w if rng.random() < 0.5 else _q(rng)
        plane = HomogeneousPlane.of(n1, n2, n3)
        if plane.is_H:
            continue
        inputs = f"p={p} plano=({plane.n1},{plane.n2},{plane.n3})"
        suite.case("p ⊆ l sse τ⁻¹(p) ∈ τ⁻¹(l)", inputs,
                   plane.contains(p) == tau_line_inv(plane).contains(tau_inv(p)))
    suite.case("pontos em H não vêm de Q²", "[1:0:0]", _rejects(lambda: tau_inv(HomogeneousPoint.of(1, 0, 0))))
    suite.case("H não vem de reta", "(0,0,1)", _rejects(lambda: tau_line_inv(HomogeneousPlane.of(0, 0, 1))))


def _order(suite: SuiteRun) -> None:
    rng = suite.rng
    for _ in range(suite.params.fuzz):
        O, I, B = random_frame(rng)
        a, b, c = _q(rng), _q(rng), _q(rng)
        A, Bp, C = (point_at(O, I, t) for t in (a, b, c))
        inputs = f"O={O} I={I} a={a} b={b} c={c}"
        less = lambda X, Y: field_less(O, I, X, Y)
        suite.case("< do entremeio = < de Q", inputs, less(A, Bp) == (a < b))
        suite.guarded("a < b ⟹ a + c < b + c", inputs,
                      lambda: not less(A, Bp) or less(add_construct(O, A, C, B), add_construct(O, Bp, C, B)))
        suite.guarded("0 < a, 0 < b ⟹ 0 < ab", inputs,
                      lambda: not (less(O, A) and less(O, Bp)) or less(O, mul_construct(O, I, A, Bp, B)))
        suite.case("0 < 1", inputs, less(O, I))


def run(suite: SuiteRun) -> None:
    _constructions(suite)
    _transport(suite)
    _order(suite)
