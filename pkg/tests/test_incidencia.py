from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from core.excecoes import GeometryError, InputFormatError
from models.incidencia import (AffineLine, AffinePoint, ConstructionTrace, HomogeneousPlane, HomogeneousPoint,
                               add_construct, coordinate, field_less, intersect, line_through, mul_construct,
                               point_at, tau, tau_inv, tau_line, tau_line_inv)

# Duas retas base: o eixo x e uma reta inclinada, cada uma com um ponto auxiliar fora dela
RETAS = [
    (AffinePoint.of(0, 0), AffinePoint.of(1, 0), AffinePoint.of(0, 1)),
    (AffinePoint.of(1, 2), AffinePoint.of(3, 3), AffinePoint.of(0, 0)),
]

racionais = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@settings(max_examples=60, derandomize=True)
@given(st.sampled_from(RETAS), racionais, racionais)
def test_constructions_match_coordinates(reta, a, c):
    O, I, B = reta
    A, C = point_at(O, I, a), point_at(O, I, c)
    assert coordinate(O, I, add_construct(O, A, C, B)) == a + c
    assert coordinate(O, I, mul_construct(O, I, A, C, B)) == a * c


@settings(max_examples=60, derandomize=True)
@given(st.sampled_from(RETAS), racionais, racionais)
def test_order_read_from_betweenness(reta, a, c):
    O, I, _ = reta
    assert field_less(O, I, point_at(O, I, a), point_at(O, I, c)) == (a < c)


def test_trace_records_auxiliary_objects():
    O, I, B = RETAS[0]
    trace = ConstructionTrace()
    resultado = add_construct(O, point_at(O, I, 2), point_at(O, I, 3), B, trace)
    assert resultado == AffinePoint.of(5, 0)
    assert trace.result == resultado
    nomes = [nome for nome, _ in trace.steps]
    assert nomes[0] == "ℓ" and "D" in nomes and nomes[-1] == "resultado"


def test_degenerate_inputs_raise():
    O, I, B = RETAS[0]
    with pytest.raises(GeometryError):
        add_construct(O, I, AffinePoint.of(2, 0), AffinePoint.of(5, 0))
    with pytest.raises(GeometryError):
        add_construct(O, I, AffinePoint.of(2, 1), B)
    with pytest.raises(GeometryError):
        mul_construct(O, O, I, I, B)
    with pytest.raises(GeometryError):
        line_through(O, O)
    with pytest.raises(GeometryError):
        intersect(AffineLine.of(0, 1, 0), AffineLine.of(0, 2, 3))


def test_tau_round_trip():
    P = AffinePoint.of("1/2", -3)
    assert tau(P) == HomogeneousPoint.of(1, -6, 2)
    assert tau_inv(tau(P)) == P
    with pytest.raises(GeometryError):
        tau_inv(HomogeneousPoint.of(1, 2, 0))


def test_tau_preserves_incidence():
    reta = line_through(AffinePoint.of(0, 1), AffinePoint.of(2, 2))
    plano = tau_line(reta)
    assert plano.contains(tau(AffinePoint.of(4, 3)))
    assert not plano.contains(tau(AffinePoint.of(4, 4)))
    assert tau_line_inv(plano) == reta
    with pytest.raises(GeometryError):
        tau_line_inv(HomogeneousPlane.of(0, 0, 5))


def test_point_parsing():
    assert AffinePoint.parse("(1/2, 3)") == AffinePoint(Fraction(1, 2), Fraction(3))
    with pytest.raises(InputFormatError):
        AffinePoint.parse("1,2,3")
