import pytest

from core.excecoes import GeometryError
from models import convexos as K
from models.incidencia import AffinePoint

pt = AffinePoint.of
poly = K.ConvexPolyhedron.parse

QUADRADO = "x >= 0; x <= 1; y >= 0; y <= 1"


def test_closure_of_open_segment():
    aberto = poly("x > 0; x < 1; y = 0")
    assert not K.is_closed(aberto)
    assert K.closure(aberto).same_set(poly("x >= 0; x <= 1; y = 0"))
    assert aberto.leq(K.closure(aberto))


def test_closure_of_empty_is_empty():
    vazio = poly("x < 0; x > 0")
    assert vazio.is_empty
    assert K.closure(vazio).is_empty


@pytest.mark.parametrize("texto, dimensao", [
    ("x = 1; y = 1", 0),
    ("y = 0", 1),
    ("y >= 0; y <= 1", 2),
    ("x < 0; x > 0", -1),
])
def test_dimension(texto, dimensao):
    assert poly(texto).dimension == dimensao


@pytest.mark.parametrize("texto, segmento, reta, afim, limitado", [
    ("x >= 0; x <= 2; y = 0", True, False, False, True),
    ("x > 0; x < 2; y = 0", False, False, False, True),
    ("x >= 0; y = 0", False, False, False, False),
    ("y = 0", False, True, True, False),
    ("x - y = 1", False, True, True, False),
    ("x = 1; y = 1", False, False, True, True),
    ("y >= 0", False, False, False, False),
    ("y >= 0; y <= 1", False, False, False, False),
    (QUADRADO, False, False, False, True),
])
def test_shape_predicates(texto, segmento, reta, afim, limitado):
    C = poly(texto)
    assert K.is_segment(C) is segmento
    assert K.is_line(C) is reta
    assert K.is_affine_subspace(C) is afim
    assert K.is_bounded(C) is limitado
    assert K.is_bounded(C) == K.is_bounded_oracle(C)


def test_plane_is_affine_and_empty_is_not():
    assert K.is_affine_subspace(K.ConvexPolyhedron.plane())
    assert not K.is_affine_subspace(K.ConvexPolyhedron.empty())
    assert K.is_bounded(K.ConvexPolyhedron.empty())


def test_project_point():
    assert K.project_point(K.Y_AXIS, K.X_AXIS, pt(2, 3)) == pt(2, 0)


def test_shadow_of_the_square():
    sombra = K.project(K.Y_AXIS, K.X_AXIS, poly(QUADRADO))
    assert sombra.same_set(poly("y = 0; x >= 0; x <= 1"))


def test_shadow_keeps_open_ends():
    sombra = K.project(K.Y_AXIS, K.X_AXIS, poly("x > 0; y > 0; x + y < 2"))
    assert sombra.same_set(poly("y = 0; x > 0; x < 2"))


def test_projection_along_the_target_line_is_rejected():
    with pytest.raises(GeometryError):
        K.project(K.X_AXIS, K.X_AXIS, poly(QUADRADO))
    with pytest.raises(GeometryError):
        K.project_point(K.X_AXIS, K.X_AXIS, pt(1, 1))


def test_hull_drops_interior_points():
    fecho = K.hull([pt(0, 0), pt(2, 0), pt(1, 1), pt(1, 0)])
    assert K.extremal_points(fecho) == {pt(0, 0), pt(2, 0), pt(1, 1)}
    assert fecho.to_polyhedron().contains(pt(1, 0))
    with pytest.raises(GeometryError):
        K.hull([])


def test_collinear_hull_keeps_the_ends():
    fecho = K.hull([pt(0, 0), pt(1, 1), pt(2, 2)])
    assert K.extremal_points(fecho) == {pt(0, 0), pt(2, 2)}
    assert K.is_segment(fecho.to_polyhedron())


def test_finite_subset_family():
    familia = K.finite_subset_family(K.X_AXIS, K.Y_AXIS, K.hull([pt(1, 1), pt(3, 2)]))
    assert familia == {pt(1, 0), pt(3, 0)}


def test_witness_for_subset_is_recovered():
    alvo = {pt(0, 0), pt(2, 0), pt(5, 0)}
    testemunha = K.witness_for_subset(K.X_AXIS, K.Y_AXIS, alvo)
    assert len(testemunha.vertices) == 3
    assert K.finite_subset_family(K.X_AXIS, K.Y_AXIS, testemunha) == alvo


def test_witness_rejects_points_off_the_line():
    with pytest.raises(GeometryError):
        K.witness_for_subset(K.X_AXIS, K.Y_AXIS, [pt(1, 1)])
    with pytest.raises(GeometryError):
        K.witness_for_subset(K.X_AXIS, K.Y_AXIS, [])
